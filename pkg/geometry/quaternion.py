"""
Unit quaternions as a model of SU(2)

The 2x2 matrices [[i, 0], [0, -i]] and [[0, i], [i, 0]] correspond to the
quaternion i and to an imaginary unit orthogonal to it; j is used for the
latter. Any two such choices are conjugate.
"""

from dataclasses import dataclass
from math import cos, sin, sqrt

import numpy as np

NORM_TOLERANCE = 1e-12


@dataclass(frozen=True)
class UnitQuaternion:
    w: float
    x: float
    y: float
    z: float

    @classmethod
    def identity(cls) -> "UnitQuaternion":
        return cls(1.0, 0.0, 0.0, 0.0)

    @classmethod
    def from_array(cls, values) -> "UnitQuaternion":
        w, x, y, z = (float(v) for v in values)
        return cls(w, x, y, z).normalized()

    @classmethod
    def exp(cls, axis, angle: float) -> "UnitQuaternion":
        """exp(angle * n) = cos(angle) + sin(angle) n for a unit imaginary n"""
        ax, ay, az = (float(v) for v in axis)
        norm = sqrt(ax * ax + ay * ay + az * az)
        if norm == 0:
            return cls.identity()
        s = sin(angle) / norm
        return cls(cos(angle), ax * s, ay * s, az * s)

    def __mul__(self, q: "UnitQuaternion") -> "UnitQuaternion":
        return UnitQuaternion(
            self.w * q.w - self.x * q.x - self.y * q.y - self.z * q.z,
            self.w * q.x + self.x * q.w + self.y * q.z - self.z * q.y,
            self.w * q.y - self.x * q.z + self.y * q.w + self.z * q.x,
            self.w * q.z + self.x * q.y - self.y * q.x + self.z * q.w,
        )

    def __neg__(self) -> "UnitQuaternion":
        return UnitQuaternion(-self.w, -self.x, -self.y, -self.z)

    def inverse(self) -> "UnitQuaternion":
        # conjugate; valid because the norm is 1
        return UnitQuaternion(self.w, -self.x, -self.y, -self.z)

    def norm(self) -> float:
        return sqrt(self.w * self.w + self.x * self.x + self.y * self.y + self.z * self.z)

    def is_unit(self) -> bool:
        return abs(self.norm() - 1.0) <= NORM_TOLERANCE

    def normalized(self) -> "UnitQuaternion":
        n = self.norm()
        if n == 0:
            raise ValueError("Cannot normalize the zero quaternion")
        return UnitQuaternion(self.w / n, self.x / n, self.y / n, self.z / n)

    def as_array(self) -> np.ndarray:
        return np.array([self.w, self.x, self.y, self.z])

    def distance(self, other: "UnitQuaternion") -> float:
        return float(np.linalg.norm(self.as_array() - other.as_array()))

    def left_matrix(self) -> np.ndarray:
        """L with self * q = L @ q"""
        w, x, y, z = self.w, self.x, self.y, self.z
        return np.array([
            [w, -x, -y, -z],
            [x, w, -z, y],
            [y, z, w, -x],
            [z, -y, x, w],
        ])

    def right_matrix(self) -> np.ndarray:
        """R with q * self = R @ q"""
        w, x, y, z = self.w, self.x, self.y, self.z
        return np.array([
            [w, -x, -y, -z],
            [x, w, z, -y],
            [y, -z, w, x],
            [z, y, -x, w],
        ])


ONE = UnitQuaternion(1.0, 0.0, 0.0, 0.0)
MINUS_ONE = UnitQuaternion(-1.0, 0.0, 0.0, 0.0)
I = UnitQuaternion(0.0, 1.0, 0.0, 0.0)
J = UnitQuaternion(0.0, 0.0, 1.0, 0.0)
K = UnitQuaternion(0.0, 0.0, 0.0, 1.0)
