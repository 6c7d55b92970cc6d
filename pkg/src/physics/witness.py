"""Спиновое состояние двух кубитов, дефазировка и свидетель запутанности."""

import re
from dataclasses import dataclass
from typing import Literal

import numpy as np
from scipy import optimize
from scipy.stats import entropy

from src.common.errors import NoSolutionError, ValidationError

DephasingModel = Literal["joint", "independent"]

# Допуски проверок матрицы плотности
NORM_TOLERANCE = 1e-12
HERMITIAN_TOLERANCE = 1e-12
EIGENVALUE_FLOOR = -1e-10

PAULI = {
    "I": np.eye(2, dtype=complex),
    "X": np.array([[0, 1], [1, 0]], dtype=complex),
    "Y": np.array([[0, -1j], [1j, 0]], dtype=complex),
    "Z": np.array([[1, 0], [0, -1]], dtype=complex),
}

# Слагаемое вида "-XX", "+0.5YZ", "II"
TERM_PATTERN = re.compile(
    r"(?P<sign>[+-]?)(?P<coef>\d+(?:\.\d*)?(?:[eE][-+]?\d+)?)?\*?"
    r"(?P<label>[IXYZ]{2})"
)

# Для каждого из 4 индексов базиса (uu, ud, du, dd) - спины кубитов
_QUBIT_BITS = np.array([[0, 0], [0, 1], [1, 0], [1, 1]])


@dataclass(frozen=True, slots=True, eq=False)
class SpinState:
    """Амплитуды в базисе uu, ud, du, dd."""

    amplitudes: np.ndarray

    def __post_init__(self) -> None:
        if self.amplitudes.shape != (4,):
            raise ValidationError("two-qubit state needs 4 amplitudes")
        norm = float(np.sum(np.abs(self.amplitudes) ** 2))
        if abs(norm - 1) > NORM_TOLERANCE:
            raise ValidationError(f"state is not normalized: {norm!r}")

    def projector(self) -> np.ndarray:
        return np.outer(self.amplitudes, self.amplitudes.conj())


@dataclass(frozen=True, slots=True, eq=False)
class DensityMatrix:
    entries: np.ndarray

    def __post_init__(self) -> None:
        rho = self.entries
        if rho.shape != (4, 4):
            raise ValidationError("density matrix must be 4x4")
        if not np.allclose(rho, rho.conj().T, atol=HERMITIAN_TOLERANCE):
            raise ValidationError("density matrix is not Hermitian")
        trace = np.trace(rho)
        if abs(trace - 1) > NORM_TOLERANCE:
            raise ValidationError(f"trace is {trace!r}, expected 1")
        if np.linalg.eigvalsh(rho).min() < EIGENVALUE_FLOOR:
            raise ValidationError("density matrix is not positive")

    def purity(self) -> float:
        """Tr(rho^2)."""
        return float(np.real(np.trace(self.entries @ self.entries)))


@dataclass(frozen=True, slots=True)
class WitnessOperator:
    """Сумма коэффициентов при произведениях матриц Паули."""

    terms: tuple[tuple[float, str], ...]

    def __post_init__(self) -> None:
        if not self.terms:
            raise ValidationError("witness needs at least one term")
        for _, label in self.terms:
            if len(label) != 2 or any(p not in PAULI for p in label):
                raise ValidationError(f"bad Pauli label '{label}'")

    @classmethod
    def from_labels(cls, text: str) -> "WitnessOperator":
        """
        Разбирает запись вида "II - XX - YZ - XZ".

        Допускаются числовые коэффициенты: "II - 0.5 XX + 2*ZZ".
        """
        compact = "".join(text.split()).upper()
        terms = []
        pos = 0
        while pos < len(compact):
            match = TERM_PATTERN.match(compact, pos)
            if match is None or (terms and not match.group("sign")):
                raise ValidationError(f"cannot parse witness '{text}'")
            coef = float(match.group("coef") or 1.0)
            if match.group("sign") == "-":
                coef = -coef
            terms.append((coef, match.group("label")))
            pos = match.end()
        if not terms:
            raise ValidationError("empty witness expression")
        return cls(tuple(terms))

    @property
    def matrix(self) -> np.ndarray:
        result = np.zeros((4, 4), dtype=complex)
        for coef, label in self.terms:
            result += coef * np.kron(PAULI[label[0]], PAULI[label[1]])
        return result

    def label(self) -> str:
        parts = []
        for coef, name in self.terms:
            sign = "-" if coef < 0 else "+"
            size = abs(coef)
            body = name if size == 1 else f"{size:g}{name}"
            parts.append(f"{sign} {body}")
        text = " ".join(parts)
        return text[2:] if text.startswith("+ ") else text


DEFAULT_WITNESS = WitnessOperator(
    ((1.0, "II"), (-1.0, "XX"), (-1.0, "YZ"), (-1.0, "XZ"))
)


@dataclass(frozen=True, slots=True)
class Detectability:
    ok: bool
    margin: float


def entangled_state(dphi_ud: float, dphi_du: float) -> SpinState:
    """(1, e^{i dphi_ud}, e^{i dphi_du}, 1) / 2 без глобальной фазы."""
    amplitudes = 0.5 * np.array(
        [1.0, np.exp(1j * dphi_ud), np.exp(1j * dphi_du), 1.0]
    )
    return SpinState(amplitudes)


def _coherence_mask(gamma_t: float, model: DephasingModel) -> np.ndarray:
    if model == "joint":
        mask = np.full((4, 4), np.exp(-gamma_t))
        np.fill_diagonal(mask, 1.0)
        return mask
    if model == "independent":
        # число кубитов, индекс которых различается в бра и кет
        flips = (_QUBIT_BITS[:, None, :] != _QUBIT_BITS[None, :, :]).sum(-1)
        return np.exp(-gamma_t * flips)
    raise ValidationError(f"unknown dephasing model '{model}'")


def dephase(
    state: SpinState, gamma_t: float, model: DephasingModel = "joint"
) -> DensityMatrix:
    """Подавляет недиагональные элементы |psi><psi|."""
    if gamma_t < 0:
        raise ValidationError("gamma*t must be >= 0")
    return DensityMatrix(state.projector() * _coherence_mask(gamma_t, model))


def expectation(
    rho: DensityMatrix, w: WitnessOperator = DEFAULT_WITNESS
) -> float:
    """Tr(W rho)."""
    matrix = w.matrix
    if not np.allclose(matrix, matrix.conj().T, atol=HERMITIAN_TOLERANCE):
        raise ValidationError("witness operator is not Hermitian")
    value = np.trace(matrix @ rho.entries)
    if abs(value.imag) > HERMITIAN_TOLERANCE:
        raise ValidationError(f"Tr(W rho) is not real: {value!r}")
    return float(value.real)


def detectability(phi_eff: float, gamma: float, t_int: float) -> Detectability:
    """Запутанность видна, пока gamma t < Phi_eff / 2."""
    if phi_eff < 0:
        raise ValidationError("effective phase must be >= 0")
    margin = phi_eff / 2 - gamma * t_int
    return Detectability(ok=margin > 0, margin=margin)


def reduced_entropy(state: SpinState) -> float:
    """Энтропия фон Неймана первого кубита, в битах."""
    psi = state.amplitudes.reshape(2, 2)
    reduced = psi @ psi.conj().T
    eigenvalues = np.clip(np.linalg.eigvalsh(reduced), 0.0, None)
    return float(entropy(eigenvalues, base=2))


def witness_scan(
    dphi_ud: float,
    dphi_du: float,
    gamma_t: np.ndarray,
    w: WitnessOperator = DEFAULT_WITNESS,
    model: DephasingModel = "joint",
) -> list[tuple[float, float]]:
    """Tr(W rho) на сетке gamma*t."""
    state = entangled_state(dphi_ud, dphi_du)
    return [
        (float(g), expectation(dephase(state, float(g), model), w))
        for g in gamma_t
    ]


def witness_root(
    dphi_ud: float,
    dphi_du: float,
    w: WitnessOperator = DEFAULT_WITNESS,
    model: DephasingModel = "joint",
) -> float:
    """
    Значение gamma*t, при котором Tr(W rho) обращается в ноль.

    Для ветвей (-Phi/2, 3Phi/2) корень равен ln(1 + Phi/2 - 3Phi^2/2 + ...),
    то есть ниже Phi/2 примерно на 3.25 Phi относительных. Критерий
    gamma t < Phi/2 совпадает с корнем в пределах 10% при Phi <= 0.03;
    при Phi = 0.05 корень ниже на 16%.
    """
    state = entangled_state(dphi_ud, dphi_du)

    def trace(gamma_t: float) -> float:
        return expectation(dephase(state, gamma_t, model), w)

    if trace(0.0) >= 0:
        raise NoSolutionError("witness does not detect the undamped state")
    upper = 1.0
    while trace(upper) < 0:
        upper *= 2
        if upper > 1e3:
            raise NoSolutionError("witness stays negative at any dephasing")
    return float(optimize.brentq(trace, 0.0, upper, xtol=1e-15))
