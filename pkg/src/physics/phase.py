"""Фазы гравитационного запутывания: статические и вдоль траекторий."""

from __future__ import annotations

import logging
import math
from dataclasses import dataclass
from typing import TYPE_CHECKING

import numpy as np
from scipy import integrate

from src.common.errors import (
    CollisionError,
    DomainError,
    GeometryError,
    NoSolutionError,
)
from src.physics.constants import CONSTANTS
from src.physics.kinematics import TrajectoryProfile, full_profile

if TYPE_CHECKING:
    from src.designer.experiment import ExperimentConfig

logger = logging.getLogger(__name__)

# Порог |sqrt(ad) - a tau/2|, ниже которого логарифм считается вырожденным
LOG_ARGUMENT_FLOOR = 1e-12


@dataclass(frozen=True, slots=True)
class PhaseBreakdown:
    """
    Фазы по шагам.

    dphi_du собирает вклад ближней пары (внутренние ветви), dphi_ud -
    дальней пары (внешние ветви); обе относительно расстояния между
    ветвями с одинаковым спином.
    """

    phi_common: float
    dphi_ud: float
    dphi_du: float
    step1: float
    step2: float
    step3: float
    total: float

    def as_record(self) -> dict[str, float]:
        return {
            "phi_common_rad": self.phi_common,
            "dphi_ud_rad": self.dphi_ud,
            "dphi_du_rad": self.dphi_du,
            "step1_rad": self.step1,
            "step2_rad": self.step2,
            "step3_rad": self.step3,
            "total_rad": self.total,
        }


def _coupling(m: float) -> float:
    """G m^2 / hbar."""
    return CONSTANTS.G * m**2 / CONSTANTS.hbar


def pairwise_phases(
    m: float, d: float, dx: float, t: float
) -> tuple[float, float, float]:
    """Фаза phi и сдвиги для пар ветвей ud и du."""
    if d <= dx:
        raise GeometryError(f"d={d:.3g} m must exceed dx={dx:.3g} m")
    scale = _coupling(m) * t
    phi = scale / d
    return phi, scale / (d + dx) - phi, scale / (d - dx) - phi


def effective_phase_static(m: float, d: float, dx: float, t: float) -> float:
    """Phi_eff = (G m^2 t / hbar)(1/(d-dx) + 1/(d+dx) - 2/d)."""
    if d <= dx:
        raise GeometryError(f"d={d:.3g} m must exceed dx={dx:.3g} m")
    return _coupling(m) * t * (1 / (d - dx) + 1 / (d + dx) - 2 / d)


def max_phase_original(m: float, dx: float, A: float, t: float) -> float:
    """Фаза исходной схемы при минимальном расстоянии A между ветвями."""
    return _coupling(m) * t * (1 / A + 1 / (2 * dx + A) - 2 / (dx + A))


def min_mass_for_phase(
    phi_target: float, A: float, dB: float, tau: float, t_int: float
) -> float:
    """
    Масса, дающая фазу phi_target в исходной схеме.

    Корень уравнения для максимальной фазы при dx = C / m, где
    C = 2 g mu_B dB (tau/2)^2 и D = G t_int / hbar.
    """
    if phi_target <= 0:
        raise DomainError("target phase must be positive")
    c = 2 * CONSTANTS.g_factor * CONSTANTS.mu_B * dB * (tau / 2) ** 2
    d = CONSTANTS.G * t_int / CONSTANTS.hbar
    denominator = 2 * (A**3 * phi_target - 2 * d * c**2)
    if denominator >= 0:
        raise NoSolutionError(
            "target phase is out of reach for this drive and distance"
        )
    root_term = math.sqrt(A * phi_target * (A**3 * phi_target + 16 * d * c**2))
    mass = c * (-3 * A**2 * phi_target - root_term) / denominator
    if not math.isfinite(mass) or mass <= 0:
        raise NoSolutionError(f"no positive mass root (got {mass!r})")
    return mass


def small_split_limit(dB: float, tau: float, t_int: float, A: float) -> float:
    """Предел dx << A: не зависит от массы."""
    drive = CONSTANTS.g_factor * CONSTANTS.mu_B * dB * tau**2 / 2
    return 2 * CONSTANTS.G * t_int / (CONSTANTS.hbar * A**3) * drive**2


def _step2_terms(
    m: float, profile: TrajectoryProfile
) -> tuple[float, float]:
    """Вклады ближней и дальней пары на шаге 2 (трапеции по сетке)."""
    step = profile.step(2)
    times = profile.times[step]
    if len(times) < 2:
        return 0.0, 0.0
    s = profile.drift_s[step]
    nr = profile.inner_separation
    dx = profile.split_size

    inner = nr - 2 * s
    if np.any(inner <= 0):
        k = int(np.argmax(inner <= 0))
        raise CollisionError(float(times[k]), float(inner[k]))

    same_spin = dx + nr - s
    near = 1 / inner - 1 / same_spin
    far = 1 / (2 * dx + nr) - 1 / same_spin
    scale = _coupling(m)
    return (
        scale * float(integrate.trapezoid(near, times)),
        scale * float(integrate.trapezoid(far, times)),
    )


def step2_phase(m: float, profile: TrajectoryProfile) -> float:
    """Фаза свободного падения с учётом дрейфа внутренних ветвей."""
    near, far = _step2_terms(m, profile)
    return near + far


def _split_terms(
    m: float, d: float, a_mag: float, tau: float
) -> tuple[float, float]:
    """Замкнутые формы вкладов ближней и дальней пары за разгон+торможение."""
    if a_mag == 0 or tau == 0:
        return 0.0, 0.0

    half = tau / 2
    d1 = d - a_mag * half**2
    d2 = d + a_mag * half**2
    disc1 = 4 * d1 * a_mag - (a_mag * tau) ** 2
    disc2 = (a_mag * tau) ** 2 + 4 * a_mag * d2
    if disc1 <= 0 or disc2 <= 0:
        raise DomainError(
            "closed form is invalid: branches approach closer than allowed"
        )

    root = math.sqrt(a_mag * d)
    gap = abs(a_mag * half - root)
    if gap < LOG_ARGUMENT_FLOOR * root:
        raise DomainError("logarithm argument is degenerate")
    baseline = half / d

    # разгон
    near_acc = -math.log(gap / (a_mag * half + root)) / (2 * root) - baseline
    far_acc = math.atan(a_mag * half / root) / root - baseline

    # торможение
    sq1 = math.sqrt(disc1)
    sq2 = math.sqrt(disc2)
    near_dec = 2 / sq1 * math.atan(a_mag * tau / sq1) - baseline
    far_dec = (
        -math.log((sq2 - a_mag * tau) / (sq2 + a_mag * tau)) / sq2 - baseline
    )

    scale = _coupling(m)
    return scale * (near_acc + near_dec), scale * (far_acc + far_dec)


def step1_phase(m: float, d: float, a_mag: float, tau: float) -> float:
    """Фаза за время расщепления, замкнутая форма."""
    near, far = _split_terms(m, d, a_mag, tau)
    return near + far


def step3_phase(
    m: float, d: float, s_max: float, a_mag: float, tau1: float
) -> float:
    """Фаза рекомбинации: step1_phase при d - s_max и tau1."""
    return step1_phase(m, d - s_max, a_mag, tau1)


def step_phase_quadrature(
    m: float, d: float, a_mag: float, tau: float
) -> tuple[float, float]:
    """
    Численная квадратура фазы расщепления (ближняя, дальняя пары).

    Используется, когда замкнутая форма неприменима.
    """
    if a_mag == 0 or tau == 0:
        return 0.0, 0.0
    half = tau / 2
    dx = 2 * a_mag * half**2
    if d <= dx:
        raise GeometryError(f"d={d:.3g} m must exceed dx={dx:.3g} m")

    def separation(t: float) -> float:
        if t <= half:
            return a_mag * t**2
        return dx - a_mag * (tau - t) ** 2

    def near(t: float) -> float:
        x = separation(t)
        return x / (d * (d - x))

    def far(t: float) -> float:
        x = separation(t)
        return -x / (d * (d + x))

    options = {"epsabs": 0.0, "epsrel": 1e-13, "limit": 200}
    near_value = sum(
        integrate.quad(near, lo, hi, **options)[0]
        for lo, hi in ((0.0, half), (half, tau))
    )
    far_value = sum(
        integrate.quad(far, lo, hi, **options)[0]
        for lo, hi in ((0.0, half), (half, tau))
    )
    scale = _coupling(m)
    return scale * near_value, scale * far_value


def _split_or_quadrature(
    m: float, d: float, a_mag: float, tau: float
) -> tuple[float, float]:
    try:
        return _split_terms(m, d, a_mag, tau)
    except DomainError as e:
        logger.info("closed form rejected (%s), using quadrature", e)
        return step_phase_quadrature(m, d, a_mag, tau)


def total_phase(
    config: ExperimentConfig, profile: TrajectoryProfile | None = None
) -> PhaseBreakdown:
    """Суммарная эффективная фаза по трём шагам."""
    spec = config.mass_spec
    if profile is None:
        profile = full_profile(spec, config.geometry, config.drive)

    m = spec.mass
    tau = config.drive.split_time
    d = profile.split_size + profile.inner_separation

    near1, far1 = _split_or_quadrature(m, d, profile.a_mag, tau)
    near2, far2 = _step2_terms(m, profile)
    near3, far3 = _split_or_quadrature(
        m, d - profile.s_max, profile.a_mag, profile.tau1
    )

    step1 = near1 + far1
    step2 = near2 + far2
    step3 = near3 + far3
    duration = tau + config.drive.flight_time + profile.tau1
    return PhaseBreakdown(
        phi_common=_coupling(m) * duration / d,
        dphi_ud=far1 + far2 + far3,
        dphi_du=near1 + near2 + near3,
        step1=step1,
        step2=step2,
        step3=step3,
        total=step1 + step2 + step3,
    )
