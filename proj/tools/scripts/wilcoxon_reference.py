#!/usr/bin/env python3
# Copyright 2026 The opmgr Authors
#
# Licensed under the Apache License, Version 2.0 (the "License");
# you may not use this file except in compliance with the License.
# You may obtain a copy of the License at
#
#     http://www.apache.org/licenses/LICENSE-2.0
#
# Unless required by applicable law or agreed to in writing, software
# distributed under the License is distributed on an "AS IS" BASIS,
# WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
# See the License for the specific language governing permissions and
# limitations under the License.

"""Regenerates src/bench/wilcoxon_reference.cpp from scipy.stats.wilcoxon.

Reference settings: zero_method='wilcox' (drop zeros), correction=False,
method='approx' (normal approximation with tie-corrected variance).
"""
import sys

import numpy as np
from scipy.stats import wilcoxon

LICENSE = open(__file__.replace("tools/scripts/wilcoxon_reference.py", "src/random.cpp")).read().split("#include")[0]


def cases():
    rng = np.random.default_rng(20240611)
    out = []
    for n in (10, 14, 18, 24, 30):
        x = rng.normal(0.4, 1.0, n)
        y = rng.normal(0.0, 1.0, n)
        out.append(("normal_%d" % n, x, y))
    for n in (12, 16, 20, 26, 40):
        x = rng.integers(0, 6, n).astype(float)
        y = rng.integers(0, 6, n).astype(float)
        out.append(("integer_ties_zeros_%d" % n, x, y))
    for n in (15, 30, 60):
        x = np.round(rng.exponential(0.5, n), 3)
        y = np.round(rng.exponential(0.6, n), 3)
        out.append(("rpd_like_%d" % n, x, y))
    out.append(("textbook_10",
                np.array([125, 115, 130, 140, 140, 115, 140, 125, 140, 135], float),
                np.array([110, 122, 125, 120, 140, 124, 123, 137, 135, 145], float)))
    out.append(("shift_by_one_20", np.arange(20, dtype=float) + 1.0, np.arange(20, dtype=float)))
    out.append(("half_zero_diffs_16",
                np.array([3, 3, 5, 5, 7, 1, 2, 9, 4, 4, 6, 8, 2, 3, 1, 5], float),
                np.array([3, 3, 5, 5, 7, 1, 2, 9, 2, 7, 1, 8, 5, 0, 4, 9], float)))
    out.append(("opposite_signs_ties_12",
                np.array([1, -1, 2, -2, 3, -3, 1, -1, 2, -2, 4, 5], float),
                np.zeros(12)))
    x = rng.normal(0, 1, 50)
    out.append(("symmetric_noise_50", x, -x[::-1]))
    out.append(("minimum_pairs_5", np.array([1.5, 2.5, 0.5, 4.0, 3.0]), np.zeros(5)))
    out.append(("shift_one_sided_8",
                np.array([10, 11, 12, 13, 14, 15, 16, 17], float),
                np.array([9, 9.5, 11, 11, 13.5, 12, 15, 14], float)))
    return out


def fmt(values):
    return "{" + ", ".join(repr(float(v)) for v in values) + "}"


def main():
    lines = [LICENSE.rstrip() + "\n",
             "// Generated by tools/scripts/wilcoxon_reference.py; do not edit.",
             '#include "opmgr/bench/oracles.hpp"', "",
             "namespace opmgr::bench {", "",
             "const std::vector<WilcoxonReferenceCase>& wilcoxon_reference_cases() {",
             "  static const std::vector<WilcoxonReferenceCase> cases{"]
    for name, x, y in cases():
        res = wilcoxon(x, y, zero_method="wilcox", correction=False, method="approx")
        lines.append('      {"%s",' % name)
        lines.append("       %s," % fmt(x))
        lines.append("       %s," % fmt(y))
        lines.append("       %r, %r}," % (float(res.statistic), float(res.pvalue)))
    lines += ["  };", "  return cases;", "}", "", "}  // namespace opmgr::bench", ""]
    sys.stdout.write("\n".join(lines))


if __name__ == "__main__":
    main()
