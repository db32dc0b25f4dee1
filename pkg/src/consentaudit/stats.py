"""Agreement, reliability, and planning statistics for audit evaluation.

Covers exactly what detector and rater evaluation need: Cohen's kappa and
precision/recall over a 2x2 confusion table, ICC(2,1) (two-way random
effects, absolute agreement, single measure) over a subjects-by-raters
matrix, correlation power analysis via the Fisher transform, and
median/IQR summaries.

Degenerate inputs (chance agreement of 1, zero variance, empty
denominators) yield None rather than a misleading number.

Normal quantiles use Acklam's rational approximation (documented
constants, relative error below 1.15e-9) so sample sizes are stable
across platforms without an external dependency.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from typing import Sequence

import numpy as np


@dataclass(frozen=True)
class Confusion2x2:
    true_pos: int
    false_pos: int
    false_neg: int
    true_neg: int

    def __post_init__(self):
        for v in (self.true_pos, self.false_pos, self.false_neg, self.true_neg):
            if v < 0:
                raise ValueError("confusion counts must be non-negative")

    @property
    def total(self) -> int:
        return self.true_pos + self.false_pos + self.false_neg + self.true_neg

    def to_dict(self) -> dict:
        return {
            "truePos": self.true_pos,
            "falsePos": self.false_pos,
            "falseNeg": self.false_neg,
            "trueNeg": self.true_neg,
        }


def cohen_kappa(c: Confusion2x2) -> float | None:
    """Chance-corrected two-rater agreement; None when chance agreement
    is exactly 1 (both raters constant)."""
    n = c.total
    if n == 0:
        raise ValueError("empty confusion table")
    po = (c.true_pos + c.true_neg) / n
    rater_a_pos = (c.true_pos + c.false_neg) / n
    rater_b_pos = (c.true_pos + c.false_pos) / n
    pe = rater_a_pos * rater_b_pos + (1 - rater_a_pos) * (1 - rater_b_pos)
    if pe == 1.0:
        return None
    return (po - pe) / (1 - pe)


def precision_recall(c: Confusion2x2) -> tuple[float | None, float | None]:
    """Standard ratios; a zero denominator leaves that metric undefined."""
    pred_pos = c.true_pos + c.false_pos
    actual_pos = c.true_pos + c.false_neg
    precision = c.true_pos / pred_pos if pred_pos else None
    recall = c.true_pos / actual_pos if actual_pos else None
    return precision, recall


def icc_absolute_agreement(scores: Sequence[Sequence[float]]) -> float | None:
    """ICC(2,1): two-way random effects, absolute agreement, single
    measure, from the ANOVA mean squares. None when total variance is 0.
    """
    m = np.asarray(scores, dtype=float)
    if m.ndim != 2:
        raise ValueError("rater matrix must be two-dimensional")
    n, k = m.shape
    if n < 2 or k < 2:
        raise ValueError("need at least 2 subjects and 2 raters")
    if np.isnan(m).any():
        raise ValueError("rater matrix has missing cells")

    grand = m.mean()
    if np.allclose(m, grand):
        return None
    row_means = m.mean(axis=1)
    col_means = m.mean(axis=0)
    ss_rows = k * float(((row_means - grand) ** 2).sum())
    ss_cols = n * float(((col_means - grand) ** 2).sum())
    ss_total = float(((m - grand) ** 2).sum())
    ss_err = ss_total - ss_rows - ss_cols

    msr = ss_rows / (n - 1)
    msc = ss_cols / (k - 1)
    mse = ss_err / ((n - 1) * (k - 1))
    denom = msr + (k - 1) * mse + (k / n) * (msc - mse)
    if denom == 0:
        return None
    return (msr - mse) / denom


# Acklam's inverse normal CDF approximation. Constants are the published
# ones; max relative error ~1.15e-9 over (0, 1).
_ACKLAM_A = (
    -3.969683028665376e01,
    2.209460984245205e02,
    -2.759285104469687e02,
    1.383577518672690e02,
    -3.066479806614716e01,
    2.506628277459239e00,
)
_ACKLAM_B = (
    -5.447609879822406e01,
    1.615858368580409e02,
    -1.556989798598866e02,
    6.680131188771972e01,
    -1.328068155288572e01,
)
_ACKLAM_C = (
    -7.784894002430293e-03,
    -3.223964580411365e-01,
    -2.400758277161838e00,
    -2.549732539343734e00,
    4.374664141464968e00,
    2.938163982698783e00,
)
_ACKLAM_D = (
    7.784695709041462e-03,
    3.224671290700398e-01,
    2.445134137142996e00,
    3.754408661907416e00,
)
_P_LOW = 0.02425


def inverse_normal_cdf(p: float) -> float:
    """Standard normal quantile z with Phi(z) = p, 0 < p < 1."""
    if not 0.0 < p < 1.0:
        raise ValueError("p must lie strictly between 0 and 1")
    a, b, c, d = _ACKLAM_A, _ACKLAM_B, _ACKLAM_C, _ACKLAM_D
    if p < _P_LOW:
        q = math.sqrt(-2 * math.log(p))
        return (
            ((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]
        ) / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1)
    if p > 1 - _P_LOW:
        q = math.sqrt(-2 * math.log(1 - p))
        return -(
            ((((c[0] * q + c[1]) * q + c[2]) * q + c[3]) * q + c[4]) * q + c[5]
        ) / ((((d[0] * q + d[1]) * q + d[2]) * q + d[3]) * q + 1)
    q = p - 0.5
    r = q * q
    return (
        (((((a[0] * r + a[1]) * r + a[2]) * r + a[3]) * r + a[4]) * r + a[5]) * q
    ) / (((((b[0] * r + b[1]) * r + b[2]) * r + b[3]) * r + b[4]) * r + 1)


def power_sample_size(r: float, alpha: float = 0.05, power: float = 0.80) -> int:
    """Participants needed to detect a correlation of magnitude ``r`` at a
    two-tailed ``alpha`` with the target ``power``, by the Fisher-z route.
    Rounded up: recruiting one extra is cheaper than an underpowered study.
    """
    if not 0.0 < r < 1.0:
        raise ValueError("r must lie strictly between 0 and 1")
    if not 0.0 < alpha < 1.0:
        raise ValueError("alpha must lie strictly between 0 and 1")
    if not 0.0 < power < 1.0:
        raise ValueError("power must lie strictly between 0 and 1")
    z_alpha = inverse_normal_cdf(1 - alpha / 2)
    z_power = inverse_normal_cdf(power)
    c_r = 0.5 * math.log((1 + r) / (1 - r))
    return math.ceil(((z_alpha + z_power) / c_r) ** 2 + 3)


def median_iqr(values: Sequence[float]) -> tuple[float, float, float]:
    """(median, q1, q3) with linear interpolation between order statistics."""
    if len(values) == 0:
        raise ValueError("median_iqr needs at least one value")
    arr = np.asarray(values, dtype=float)
    q1, med, q3 = np.percentile(arr, [25, 50, 75])
    return float(med), float(q1), float(q3)
