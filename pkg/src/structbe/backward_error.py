"""Structured backward errors for saddle-point systems
    [[A, B^T], [B, C]] [x; y] = [f; g].

Each backward error is the norm of the minimum-norm solution of a linear
system X dE = rd, where the columns of X encode the admissible perturbation
directions of (A, B, C, f, g) under the chosen structure class:

  S1  A, B, C circulant (n = m)
  S2  A, B, C Toeplitz
  S3  B symmetric Toeplitz, A and C dense (n = m)
  S0  unstructured

with optional sparsity-pattern preservation.  The unknown vector dE stacks
w_i-weighted, Frobenius-compensated generator (or vec) blocks in the order
(dA, dB, dC, df, dg); zero-weight blocks are deleted from X and fixed to zero.
"""

from dataclasses import dataclass, field

import numpy as np

from .dense import (
    ShapeError,
    consistency_tol,
    frob_norm,
    min_norm_solve,
    sign_pattern,
    unvec_col_major,
    vec_col_major,
)
from .structured import (
    CIRCULANT,
    SYM_TOEPLITZ,
    TOEPLITZ,
    StructureViolationError,
    build,
    cr_of_vector,
    g_matrix,
    gen_length,
    h_matrix,
    has_structure,
    i_matrix,
    j1_matrix,
    j2_matrix,
    k_matrix,
    scaling_for,
    vec_of_structure,
)

S0, S1, S2, S3 = "S0", "S1", "S2", "S3"
CLASSES = (S0, S1, S2, S3)

PRESETS = ("absolute", "relative")


@dataclass(frozen=True)
class Weights:
    w1: float
    w2: float
    w3: float
    w4: float
    w5: float

    def __post_init__(self):
        ws = self.as_tuple()
        if any(not np.isfinite(w) or w < 0 for w in ws):
            raise ValueError("weights must be finite and nonnegative")
        if all(w == 0 for w in ws):
            raise ValueError("at least one weight must be positive")

    def as_tuple(self):
        return (self.w1, self.w2, self.w3, self.w4, self.w5)

    @staticmethod
    def absolute():
        return Weights(1.0, 1.0, 1.0, 1.0, 1.0)

    @staticmethod
    def relative(sys):
        def inv(x):
            return 1.0 / x if x > 0 else 0.0

        return Weights(
            inv(frob_norm(sys.A)),
            inv(frob_norm(sys.B)),
            inv(frob_norm(sys.C)),
            inv(float(np.linalg.norm(sys.f))),
            inv(float(np.linalg.norm(sys.g))),
        )

    @staticmethod
    def from_preset(name, sys):
        if name == "absolute":
            return Weights.absolute()
        if name == "relative":
            return Weights.relative(sys)
        raise ValueError(f"unknown weight preset {name!r}")


@dataclass(frozen=True)
class SaddleSystem:
    A: np.ndarray
    B: np.ndarray
    C: np.ndarray
    f: np.ndarray
    g: np.ndarray
    tags: dict = field(default_factory=dict)

    def __post_init__(self):
        A = np.atleast_2d(np.asarray(self.A))
        B = np.atleast_2d(np.asarray(self.B))
        C = np.atleast_2d(np.asarray(self.C))
        f = np.atleast_1d(np.asarray(self.f))
        g = np.atleast_1d(np.asarray(self.g))
        for name, arr in (("A", A), ("B", B), ("C", C), ("f", f), ("g", g)):
            if not np.all(np.isfinite(arr)):
                raise ValueError(f"block {name} contains non-finite entries")
            object.__setattr__(self, name, arr)
        n, m = A.shape[1], B.shape[0]
        if A.shape != (n, n):
            raise ShapeError(f"A must be square, got {A.shape}")
        if B.shape != (m, n):
            raise ShapeError(f"B shape {B.shape} inconsistent with A {A.shape}")
        if C.shape != (m, m):
            raise ShapeError(f"C must be {m}x{m}, got {C.shape}")
        if f.shape != (n,) or g.shape != (m,):
            raise ShapeError(f"f, g lengths {f.shape}, {g.shape} must be ({n},), ({m},)")
        for name, kind in self.tags.items():
            if kind is None:
                continue
            block = getattr(self, name)
            if kind in (CIRCULANT, SYM_TOEPLITZ) and block.shape[0] != block.shape[1]:
                raise ShapeError(f"{kind} tag on {name} requires a square block")
            vec_of_structure(block, kind)

    @property
    def n(self):
        return self.A.shape[0]

    @property
    def m(self):
        return self.B.shape[0]

    def full_matrix(self):
        return np.block([[self.A, self.B.T], [self.B, self.C]])

    def rhs(self):
        return np.concatenate([self.f, self.g])


@dataclass(frozen=True)
class Residual:
    rf: np.ndarray
    rg: np.ndarray

    @property
    def rd(self):
        return np.concatenate([self.rf, self.rg])


@dataclass(frozen=True)
class PerturbationSet:
    dA: np.ndarray
    dB: np.ndarray
    dC: np.ndarray
    df: np.ndarray
    dg: np.ndarray

    @staticmethod
    def zeros(sys):
        n, m = sys.n, sys.m
        return PerturbationSet(
            np.zeros((n, n)), np.zeros((m, n)), np.zeros((m, m)), np.zeros(n), np.zeros(m)
        )


@dataclass(frozen=True)
class VerifyResult:
    residual_norm: float
    structure_ok: bool
    sparsity_ok: bool
    weighted_norm: float


@dataclass(frozen=True)
class BEReport:
    eta: float
    perturbations: PerturbationSet
    verify_residual: float
    weighted_norm: float
    feasible: bool
    coefficient_rank: int


def residual(sys, x_tilde, y_tilde):
    x = np.atleast_1d(np.asarray(x_tilde))
    y = np.atleast_1d(np.asarray(y_tilde))
    if x.shape != (sys.n,) or y.shape != (sys.m,):
        raise ShapeError(f"solution lengths {x.shape}, {y.shape} must be ({sys.n},), ({sys.m},)")
    rf = sys.f - sys.A @ x - sys.B.T @ y
    rg = sys.g - sys.B @ x - sys.C @ y
    return Residual(rf=rf, rg=rg)


def rigal_gaches(sys, x_tilde, y_tilde):
    """Unstructured normwise backward error ||d - Au|| / sqrt(||A||_F^2 ||u||^2 + ||d||^2)."""
    res = residual(sys, x_tilde, y_tilde)
    u = np.concatenate([np.atleast_1d(x_tilde), np.atleast_1d(y_tilde)])
    d = sys.rhs()
    den = np.sqrt(
        frob_norm(sys.full_matrix()) ** 2 * np.linalg.norm(u) ** 2 + np.linalg.norm(d) ** 2
    )
    if den == 0:
        raise ZeroDivisionError("rigal_gaches undefined: zero matrix, solution and rhs")
    return float(np.linalg.norm(res.rd) / den)


@dataclass(frozen=True)
class _Segment:
    name: str
    weight: float
    top: np.ndarray
    bot: np.ndarray
    rebuild: callable  # raw coefficient slice (without 1/w) -> perturbation block

    @property
    def ncols(self):
        return self.top.shape[1]


def _structured_segment(name, w, kind, p, q, block, sparsity, top_builder, bot_builder):
    """Segment for a structure-constrained block.  The unknown slice holds
    w * diag(scale) * vec_kind(dX (.) Theta)."""
    scale = scaling_for(kind, p, q)
    mask = sign_pattern(vec_of_structure(block, kind)) if sparsity else np.ones(gen_length(kind, p, q))
    cols = mask / scale
    top = top_builder() * cols[None, :] if top_builder is not None else None
    bot = bot_builder() * cols[None, :] if bot_builder is not None else None

    def rebuild(raw, w=w, kind=kind, p=p, q=q, scale=scale, mask=mask):
        gen = raw / (w * scale) * mask
        return build(kind, gen, p, q)

    return name, w, top, bot, rebuild


def _dense_segment(name, w, p, q, block, sparsity):
    mask = sign_pattern(block) if sparsity else np.ones((p, q))
    vmask = vec_col_major(mask)

    def rebuild(raw, w=w, p=p, q=q, mask=mask):
        return unvec_col_major(raw / w, p, q) * mask

    return name, w, vmask, rebuild


def _require(cond, msg):
    if not cond:
        raise StructureViolationError(msg)


def _layout(sys, x_tilde, y_tilde, weights, structure_class, sparsity, structure_tol=0.0):
    n, m = sys.n, sys.m
    x = np.zeros(n) if x_tilde is None else np.atleast_1d(np.asarray(x_tilde))
    y = np.zeros(m) if y_tilde is None else np.atleast_1d(np.asarray(y_tilde))
    w1, w2, w3, w4, w5 = weights.as_tuple()
    zt = lambda k: np.zeros((n, k))
    zb = lambda k: np.zeros((m, k))
    segs = []

    def add_structured(name, w, kind, p, q, block, top_b, bot_b):
        if w > 0:
            _require(
                has_structure(block, kind, tol=structure_tol),
                f"{structure_class} requires block {name[1:]} to be {kind}",
            )
        # deleted segments never build masks or rebuild blocks, so a zero-weight
        # block needs neither structure nor a meaningful effective weight
        weff = w if w > 0 else 1.0
        nm, wt, top, bot, rb = _structured_segment(
            name, weff, kind, p, q, block, sparsity and w > 0, top_b, bot_b
        )
        k = gen_length(kind, p, q)
        segs.append(_Segment(name, w, top if top is not None else zt(k), bot if bot is not None else zb(k), rb))

    def add_dense(name, w, p, q, block):
        weff = w if w > 0 else 1.0
        nm, wt, vmask, rb = _dense_segment(name, weff, p, q, block, sparsity)
        if name == "dA":
            top, bot = j1_matrix(x, n) * vmask[None, :], zb(p * q)
        elif name == "dC":
            top, bot = zt(p * q), j1_matrix(y, m) * vmask[None, :]
        else:  # dB
            top = j2_matrix(y, n) * vmask[None, :]
            bot = j1_matrix(x, m) * vmask[None, :]
        segs.append(_Segment(name, w, top, bot, rb))

    if structure_class == S1:
        _require(n == m, "S1 requires n == m")
        add_structured("dA", w1, CIRCULANT, n, n, sys.A, lambda: cr_of_vector(x), None)
        add_structured("dB", w2, CIRCULANT, n, n, sys.B, lambda: h_matrix(y), lambda: cr_of_vector(x))
        add_structured("dC", w3, CIRCULANT, n, n, sys.C, None, lambda: cr_of_vector(y))
    elif structure_class == S2:
        add_structured("dA", w1, TOEPLITZ, n, n, sys.A, lambda: k_matrix(x, n), None)
        add_structured("dB", w2, TOEPLITZ, m, n, sys.B, lambda: g_matrix(y, n), lambda: k_matrix(x, m))
        add_structured("dC", w3, TOEPLITZ, m, m, sys.C, None, lambda: k_matrix(y, m))
    elif structure_class == S3:
        _require(n == m, "S3 requires n == m")
        add_dense("dA", w1, n, n, sys.A)
        add_structured("dB", w2, SYM_TOEPLITZ, n, n, sys.B, lambda: i_matrix(y), lambda: i_matrix(x))
        add_dense("dC", w3, n, n, sys.C)
    elif structure_class == S0:
        add_dense("dA", w1, n, n, sys.A)
        add_dense("dB", w2, m, n, sys.B)
        add_dense("dC", w3, m, m, sys.C)
    else:
        raise ValueError(f"unknown structure class {structure_class!r}")

    segs.append(_Segment("df", w4, -np.eye(n), zb(n), lambda raw, w=(w4 or 1.0): raw / w))
    segs.append(_Segment("dg", w5, zt(m), -np.eye(m), lambda raw, w=(w5 or 1.0): raw / w))
    return segs


def assemble_coefficient(sys, x_tilde, y_tilde, weights, structure_class, sparsity,
                         structure_tol=0.0):
    segs = _layout(sys, x_tilde, y_tilde, weights, structure_class, sparsity, structure_tol)
    active = [s for s in segs if s.weight > 0]
    return np.hstack([np.vstack([s.top, s.bot]) / s.weight for s in active])


def extract_perturbations(delta_e, sys, weights, structure_class, sparsity,
                          structure_tol=0.0):
    segs = _layout(sys, None, None, weights, structure_class, sparsity, structure_tol)
    blocks = {}
    pos = 0
    for s in segs:
        if s.weight > 0:
            raw = np.asarray(delta_e)[pos : pos + s.ncols]
            pos += s.ncols
            blocks[s.name] = s.rebuild(raw)
        else:
            blocks[s.name] = None
    if pos != np.asarray(delta_e).size:
        raise ShapeError(f"delta_e length {np.asarray(delta_e).size} != layout width {pos}")
    zero = PerturbationSet.zeros(sys)
    return PerturbationSet(
        dA=blocks["dA"] if blocks["dA"] is not None else zero.dA,
        dB=blocks["dB"] if blocks["dB"] is not None else zero.dB,
        dC=blocks["dC"] if blocks["dC"] is not None else zero.dC,
        df=blocks["df"] if blocks["df"] is not None else zero.df,
        dg=blocks["dg"] if blocks["dg"] is not None else zero.dg,
    )


def weighted_triple_norm(pert, weights):
    w1, w2, w3, w4, w5 = weights.as_tuple()
    return float(
        np.sqrt(
            (w1 * frob_norm(pert.dA)) ** 2
            + (w2 * frob_norm(pert.dB)) ** 2
            + (w3 * frob_norm(pert.dC)) ** 2
            + (w4 * np.linalg.norm(pert.df)) ** 2
            + (w5 * np.linalg.norm(pert.dg)) ** 2
        )
    )


def perturbation_residual(sys, x_tilde, y_tilde, pert):
    x = np.atleast_1d(np.asarray(x_tilde))
    y = np.atleast_1d(np.asarray(y_tilde))
    rf = (sys.A + pert.dA) @ x + (sys.B + pert.dB).T @ y - (sys.f + pert.df)
    rg = (sys.B + pert.dB) @ x + (sys.C + pert.dC) @ y - (sys.g + pert.dg)
    return float(np.linalg.norm(np.concatenate([rf, rg])))


_CLASS_KINDS = {
    S1: {"dA": CIRCULANT, "dB": CIRCULANT, "dC": CIRCULANT},
    S2: {"dA": TOEPLITZ, "dB": TOEPLITZ, "dC": TOEPLITZ},
    S3: {"dB": SYM_TOEPLITZ},
    S0: {},
}


def verify_perturbation(sys, x_tilde, y_tilde, pert, weights, structure_class=S0,
                        sparsity=False, structure_tol=0.0):
    res_norm = perturbation_residual(sys, x_tilde, y_tilde, pert)
    kinds = _CLASS_KINDS[structure_class]
    blocks = {"dA": (pert.dA, sys.A), "dB": (pert.dB, sys.B), "dC": (pert.dC, sys.C)}
    structure_ok = all(
        has_structure(blocks[name][0], kind, tol=structure_tol) for name, kind in kinds.items()
    )
    sparsity_ok = True
    if sparsity:
        for dX, X in blocks.values():
            sparsity_ok = sparsity_ok and bool(np.all(dX * (1 - sign_pattern(X)) == 0))
    return VerifyResult(
        residual_norm=res_norm,
        structure_ok=structure_ok,
        sparsity_ok=sparsity_ok,
        weighted_norm=weighted_triple_norm(pert, weights),
    )


def compute_be(sys, x_tilde, y_tilde, weights, structure_class, sparsity,
               tol=None, structure_tol=0.0):
    """Backward error of (x_tilde, y_tilde) for the given structure class,
    with the minimal perturbations attaining it."""
    segs = _layout(sys, x_tilde, y_tilde, weights, structure_class, sparsity, structure_tol)
    active = [s for s in segs if s.weight > 0]
    X = np.hstack([np.vstack([s.top, s.bot]) / s.weight for s in active])
    rd = residual(sys, x_tilde, y_tilde).rd
    sol = min_norm_solve(X, rd)
    ctol = consistency_tol() if tol is None else tol
    feasible = sol.residual_norm <= ctol * np.linalg.norm(rd)
    if not feasible:
        return BEReport(
            eta=float("nan"),
            perturbations=PerturbationSet.zeros(sys),
            verify_residual=float(np.linalg.norm(rd)),
            weighted_norm=float("nan"),
            feasible=False,
            coefficient_rank=sol.effective_rank,
        )
    pert = extract_perturbations(sol.solution, sys, weights, structure_class, sparsity,
                                 structure_tol)
    return BEReport(
        eta=float(np.linalg.norm(sol.solution)),
        perturbations=pert,
        verify_residual=perturbation_residual(sys, x_tilde, y_tilde, pert),
        weighted_norm=weighted_triple_norm(pert, weights),
        feasible=True,
        coefficient_rank=sol.effective_rank,
    )
