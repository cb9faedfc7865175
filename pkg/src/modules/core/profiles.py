from dataclasses import dataclass
from enum import Enum
import numpy as np

from .errors import ProfileError


class ProfileKind(str, Enum):
    ZERO = "zero"
    SECH2 = "sech2"
    SECH = "sech"
    GAUSSIAN = "gaussian"
    NLS_GROUND_STATE = "nls_ground_state"


def _sech(z: np.ndarray) -> np.ndarray:
    # 1/cosh overflows quietly to 0 for large |z|
    with np.errstate(over="ignore"):
        return 1.0 / np.cosh(z)


@dataclass(frozen=True)
class PotentialProfile:
    """Even, exponentially decaying profiles U(x) and W(x) of one potential.

    For ``nls_ground_state`` the amplitudes are ignored: with the cubic
    ground state phi(x) = sqrt(2 omega) sech(sqrt(omega) x) the linearised
    potential is U = -2 phi^2, W = phi^2.
    """
    kind: ProfileKind = ProfileKind.ZERO
    u_amplitude: float = 0.0
    w_amplitude: float = 0.0
    width: float = 1.0
    omega: float = 1.0

    def __post_init__(self):
        if self.width <= 0:
            raise ProfileError(f"profile width must be positive, got {self.width}")
        if self.omega <= 0:
            raise ProfileError(f"omega must be positive, got {self.omega}")

    def _shape(self, x: np.ndarray) -> np.ndarray:
        z = np.asarray(x, dtype=float) / self.width
        if self.kind == ProfileKind.ZERO:
            return np.zeros_like(z)
        if self.kind == ProfileKind.SECH2:
            return _sech(z) ** 2
        if self.kind == ProfileKind.SECH:
            return _sech(z)
        if self.kind == ProfileKind.GAUSSIAN:
            return np.exp(-z * z)
        raise ProfileError(f"no scalar shape for profile kind {self.kind}")

    def ground_state(self, x: np.ndarray) -> np.ndarray:
        return np.sqrt(2.0 * self.omega) * _sech(np.sqrt(self.omega) * np.asarray(x, dtype=float))

    def U(self, x: np.ndarray) -> np.ndarray:
        if self.kind == ProfileKind.NLS_GROUND_STATE:
            return -2.0 * self.ground_state(x) ** 2
        return self.u_amplitude * self._shape(x)

    def W(self, x: np.ndarray) -> np.ndarray:
        if self.kind == ProfileKind.NLS_GROUND_STATE:
            return self.ground_state(x) ** 2
        return self.w_amplitude * self._shape(x)

    @property
    def is_zero(self) -> bool:
        if self.kind == ProfileKind.ZERO:
            return True
        if self.kind == ProfileKind.NLS_GROUND_STATE:
            return False
        return self.u_amplitude == 0.0 and self.w_amplitude == 0.0

    @property
    def gamma_decay(self) -> float:
        """Exponential decay rate bounding |U| and |W|."""
        if self.kind == ProfileKind.SECH2:
            return 2.0 / self.width
        if self.kind in (ProfileKind.SECH, ProfileKind.GAUSSIAN):
            return 1.0 / self.width
        if self.kind == ProfileKind.NLS_GROUND_STATE:
            return 2.0 * np.sqrt(self.omega)
        return 1.0

    def envelope(self, x: np.ndarray) -> np.ndarray:
        return np.maximum(np.abs(self.U(x)), np.abs(self.W(x)))

    def support_radius(self, tol: float = 1e-12) -> float:
        """Smallest R with envelope(x) <= tol * max envelope for |x| >= R."""
        if self.is_zero:
            return 0.0
        radii = np.linspace(0.0, 400.0 * self.width, 40001)
        env = self.envelope(radii)
        above = np.nonzero(env > tol * env.max())[0]
        return float(radii[above[-1]]) if above.size else 0.0

    def verify(self, x: np.ndarray) -> float:
        """Check evenness and exponential decay on the nodes; return the fitted constant C."""
        for name, fn in (("U", self.U), ("W", self.W)):
            values = fn(x)
            mirrored = fn(-x)
            if not np.allclose(values, mirrored, atol=1e-12, rtol=1e-10):
                raise ProfileError(f"profile {name} is not even")
        env = self.envelope(x)
        if not np.any(env):
            return 0.0
        bound = env * np.exp(self.gamma_decay * np.abs(x))
        constant = float(bound.max())
        if not np.isfinite(constant):
            raise ProfileError("profile does not decay at the declared rate")
        return constant
