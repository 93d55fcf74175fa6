"""
Welch's t-test on seed batches of a stochastic measure
"""

from dataclasses import dataclass
from typing import Sequence

import numpy as np
from scipy import stats

SIGNIFICANCE = 0.01


@dataclass(frozen=True)
class WelchResult:
    mean_a: float
    mean_b: float
    std_a: float
    std_b: float
    t: float
    df: float
    critical: float

    @property
    def a_greater(self) -> bool:
        """mean(a) > mean(b) at the one-tailed significance level"""
        return self.t > self.critical

    @property
    def a_less(self) -> bool:
        return self.t < -self.critical

    @property
    def differ(self) -> bool:
        return abs(self.t) > self.critical

    def as_dict(self):
        return {
            'mean_a': self.mean_a, 'mean_b': self.mean_b,
            'std_a': self.std_a, 'std_b': self.std_b,
            't': self.t, 'df': self.df, 'critical': self.critical,
        }


def welch(a: Sequence[float], b: Sequence[float], significance: float = SIGNIFICANCE) -> WelchResult:
    """
    Welch t-statistic for mean(a) − mean(b) with Welch–Satterthwaite degrees
    of freedom; ``critical`` is the one-tailed quantile at ``significance``
    """
    a = np.asarray(a, dtype=float)
    b = np.asarray(b, dtype=float)
    if len(a) < 2 or len(b) < 2:
        raise ValueError('Welch comparison needs at least two samples per batch')
    var_a = a.var(ddof=1) / len(a)
    var_b = b.var(ddof=1) / len(b)
    difference = a.mean() - b.mean()
    pooled = var_a + var_b
    if pooled == 0:
        t = 0.0 if difference == 0 else float(np.sign(difference) * np.inf)
        df = float(len(a) + len(b) - 2)
    else:
        t = float(difference / np.sqrt(pooled))
        df = float(pooled ** 2 / (var_a ** 2 / (len(a) - 1) + var_b ** 2 / (len(b) - 1)))
    return WelchResult(
        mean_a=float(a.mean()), mean_b=float(b.mean()),
        std_a=float(a.std(ddof=1)), std_b=float(b.std(ddof=1)),
        t=t, df=df, critical=float(stats.t.ppf(1 - significance, df)),
    )
