from dataclasses import dataclass

import numpy as np
from scipy.special import betainc

from ..errors import DegenerateInputError


@dataclass(frozen=True)
class CorrelationResult:
    """Pearson correlation between two variables

    Attributes
    ----------
    x_name, y_name : str
        names of the correlated variables
    n : int
        sample size
    r : float
        correlation coefficient, in [-1, 1]
    p : float
        two-tailed p-value, in [0, 1]
    """

    x_name: str
    y_name: str
    n: int
    r: float
    p: float

    @property
    def pair(self):
        return f"{self.x_name}~{self.y_name}"


def pearson(x, y, x_name="x", y_name="y"):
    """Pearson's correlation coefficient with its two-tailed p-value

    The p-value is the two-tailed probability of the t statistic
    ``r * sqrt((n - 2) / (1 - r**2))`` under a Student t distribution with
    ``n - 2`` degrees of freedom, evaluated through the regularized
    incomplete beta function ``I_{1 - r**2}((n - 2) / 2, 1 / 2)``.

    Parameters
    ----------
    x, y : array-like of float
        samples of equal length
    x_name, y_name : str, optional
        names stored in the result

    Returns
    -------
    CorrelationResult

    Raises
    ------
    DegenerateInputError
        if fewer than 3 samples are given or either input is constant
    ValueError
        if the inputs differ in length or hold nan or inf
    """
    x = np.asarray(x, dtype=np.float64)
    y = np.asarray(y, dtype=np.float64)
    if x.ndim != 1 or x.shape != y.shape:
        raise ValueError(f"Expected two vectors of equal length, got shapes {x.shape} and {y.shape}.")
    if not (np.all(np.isfinite(x)) and np.all(np.isfinite(y))):
        raise ValueError("Correlation inputs must be finite, got nan or inf.")
    n = x.shape[0]
    if n < 3:
        raise DegenerateInputError(f"Correlation is undefined for n={n} samples, at least 3 are needed.")
    if np.all(x == x[0]) or np.all(y == y[0]):
        raise DegenerateInputError("Correlation is undefined for a constant input.")

    dx = x - x.mean()
    dy = y - y.mean()
    r = float(np.dot(dx, dy) / np.sqrt(np.dot(dx, dx) * np.dot(dy, dy)))
    r = min(1.0, max(-1.0, r))

    df = n - 2
    p = float(betainc(0.5 * df, 0.5, 1.0 - r * r))
    p = min(1.0, max(0.0, p))
    return CorrelationResult(x_name=x_name, y_name=y_name, n=int(n), r=r, p=p)
