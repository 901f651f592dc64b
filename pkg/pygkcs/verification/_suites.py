#
# Copyright (c) 2020 pygkcs developers
# This software is distributed under the terms of the MIT License.
#

"""
The invariant suites. Each one evaluates the identities of one subpackage over a small fixed grid,
always against a route that does not share the code under test: an independent library, a different
representation of the same function, an analytic constant, or quadrature.
Every case names the mathematical result it checks.
"""

from __future__ import annotations
import math
import cmath
import typing
import logging
import dataclasses
import numpy
import scipy.special
from .. import specfun
from .. import gk_model
from .. import coherent
from .. import resolution
from ._report import VerificationReport, ReportCollector


DEFAULT_EPS_LADDER = (0.1, 0.05, 0.02, 0.01)

_EPSILON = float(numpy.finfo(float).eps)

_LANCZOS = 'Lanczos approximation of log-gamma'
_POCHHAMMER = 'Pochhammer symbol as a ratio of gamma functions'
_LAGUERRE_1F1 = 'Laguerre polynomials as terminating 1F1'
_KUMMER = 'Kummer transformation of 1F1'
_PFAFF = 'Pfaff transformation of 2F1'
_MP_HYPERGEOMETRIC = 'Meixner-Pollaczek polynomials as terminating 2F1'
_MP_PARITY = 'parity of the Meixner-Pollaczek polynomials'
_MP_BILINEAR = 'bilinear generating function of the Meixner-Pollaczek polynomials'
_LAGUERRE_GENERATING = 'generating function of the products 2F1 L_n'
_GK_SPECTRUM = 'spectrum of the Gol\'dman-Krivchenkov Hamiltonian'
_GK_BASIS = 'orthonormal eigenbasis of the Gol\'dman-Krivchenkov Hamiltonian'
_GK_STANDARD_FORM = 'eigenfunctions through confluent hypergeometric functions'
_OSCILLATION = 'the m-th eigenfunction has m nodes'
_CS_WEIGHTS = 'weight sequence of the coherent states'
_CS_NORMALIZATION = 'closed form of the normalization function'
_CS_REFLECTION = 'invariance under the reflection (x, theta) -> (-x, pi - theta)'
_MP_WEIGHT = 'orthogonality weight of the Meixner-Pollaczek polynomials'
_CS_WAVEFUNCTION = 'closed form of the coherent-state wavefunction'
_CS_OVERLAP = 'overlap of two coherent states'
_MP_ORTHOGONALITY = 'orthogonality relations of the Meixner-Pollaczek polynomials'
_HARDY_HILLE = 'Hardy-Hille formula for the Laguerre bilinear kernel'
_SPECTRAL_DAMPING = 'action of O_eps on the eigenbasis'
_KERNEL_FORM = 'integral kernel of O_eps'
_POISSON_LIMIT = 'resolution of the identity as eps -> 0'

_logger = logging.getLogger(__name__)


@dataclasses.dataclass(frozen=True)
class SuiteOptions:
    """
    Settings shared by the suites.

    >>> SuiteOptions().eps_ladder
    (0.1, 0.05, 0.02, 0.01)
    >>> SuiteOptions(eps_ladder=(0.01, 0.1))
    Traceback (most recent call last):
    ...
    ValueError: ...
    """

    eps_ladder: typing.Tuple[float, ...] = DEFAULT_EPS_LADDER
    """
    The regularization ladder of the resolution-of-identity traces: positive and strictly decreasing.
    """

    def __post_init__(self) -> None:
        ladder = tuple(float(x) for x in self.eps_ladder)
        if not ladder or not all(e > 0 for e in ladder) or not all(b < a for a, b in zip(ladder, ladder[1:])):
            raise ValueError(f'The ladder shall be non-empty, positive, and strictly decreasing: {self.eps_ladder}')
        object.__setattr__(self, 'eps_ladder', ladder)


def specfun_suite(options: SuiteOptions = SuiteOptions()) -> typing.List[VerificationReport]:
    c = ReportCollector('specfun')

    for z in (0.5, 1.0, 2.5, 5.0, 10.3, 1 + 1j, 0.7 + 3j, 2 - 5j, 25 + 0.5j):
        with c.case('log-gamma', 'scipy.special.loggamma', _LANCZOS):
            c.compare(f'log-gamma at {z}', 'scipy.special.loggamma',
                      specfun.log_gamma(z), complex(scipy.special.loggamma(complex(z))), tolerance=1e-12, floor=1.0)

    with c.case('gamma(1/2)² = π', 'analytic', _LANCZOS):
        c.compare('gamma(1/2)² = π', 'analytic', specfun.gamma(0.5).real ** 2, math.pi, tolerance=1e-13)
    with c.case('gamma(5) = 24', 'analytic', _LANCZOS):
        c.compare('gamma(5) = 24', 'analytic', specfun.gamma(5).real, 24.0, tolerance=1e-13)
    with c.case('|Γ(1+i)|² = π/sinh π', 'analytic', _LANCZOS):
        c.compare('|Γ(1+i)|² = π/sinh π', 'analytic', specfun.abs_gamma_sq(1.0, 1.0), math.pi / math.sinh(math.pi),
                  tolerance=1e-13)

    for a in (0.5, 1.7, 3.2):
        for m in (0, 3, 10):
            with c.case('Pochhammer product', 'gamma ratio', _POCHHAMMER):
                ratio = cmath.exp(specfun.log_gamma(a + m) - specfun.log_gamma(a))
                c.compare(f'({a})_{m} by product', 'gamma ratio', specfun.pochhammer(a, m), ratio, tolerance=1e-12)

    for m in (0, 1, 4, 8):
        for a in (0.0, 0.5, 1.5):
            for u in (0.5, 2.0, 5.0):
                with c.case('Laguerre recurrence', 'terminating 1F1', _LAGUERRE_1F1):
                    via = specfun.hyp1f1(-m, a + 1, u).real * specfun.pochhammer(a + 1, m).real / math.factorial(m)
                    c.compare(f'L_{m}^({a})({u})', 'terminating 1F1', specfun.laguerre(m, a, u), via,
                              tolerance=1e-11, floor=1.0)

    for a, cc, z in ((0.3, 2.5, 1.7), (1.25, 2.5, 3.1), (0.7, 1.8, 4.0)):
        with c.case('Kummer transformation', 'scipy.special.hyp1f1', _KUMMER):
            c.compare(f'1F1({a}; {cc}; -{z}) = e^-z 1F1({cc}-{a}; {cc}; {z})', 'scipy.special.hyp1f1',
                      specfun.hyp1f1(a, cc, -z).value, math.exp(-z) * float(scipy.special.hyp1f1(cc - a, cc, z)),
                      tolerance=1e-11)

    with c.case('Gauss hypergeometric Pfaff branch', 'elementary', _PFAFF):
        c.compare('2F1(1/2, 1; 3/2; -1/4) = 2 atan(1/2)', 'elementary',
                  specfun.hyp2f1(0.5, 1.0, 1.5, -0.25).value, 2.0 * math.atan(0.5), tolerance=1e-12)

    xs = numpy.linspace(-5.0, 5.0, 21)
    for lam in (0.75, 1.25, 2.0):
        for theta in (math.pi / 4, math.pi / 2, 2 * math.pi / 3):
            p = specfun.MPPolyParams(lam, theta)
            q = specfun.MPPolyParams(lam, math.pi - theta)
            for m in range(41):
                rec = numpy.asarray(specfun.mp_poly(m, p, xs), dtype=float)
                with c.case('MP recurrence', 'hypergeometric representation', _MP_HYPERGEOMETRIC):
                    _compare_mp_routes(c, m, p, xs, rec)
                with c.case('MP parity', 'reflection', _MP_PARITY):
                    reflected = numpy.asarray(specfun.mp_poly(m, q, -xs), dtype=float)
                    k = int(numpy.argmax(numpy.abs(reflected - (-1) ** m * rec) / numpy.maximum(1.0, numpy.abs(rec))))
                    c.compare(f'P_{m}^({lam})(-x, π-θ) = (-1)^m P_{m}^({lam})(x, θ) at x={xs[k]:g} θ={theta:.6f}',
                              'reflection', float(reflected[k]), (-1) ** m * float(rec[k]), tolerance=1e-11, floor=1.0)

    mu = math.exp(-0.4)
    for gamma, x, y, t1, t2 in ((3.0, 0.7, 0.7, math.pi / 3, math.pi / 3),
                                (2.5, 0.3, -1.1, math.pi / 4, 2 * math.pi / 3)):
        with c.case('MP bilinear generating function', 'series', _MP_BILINEAR):
            series = specfun.mp_bilinear_series(mu, gamma, x, y, t1, t2)
            c.compare(f'MP bilinear sum at mu={mu:.6f} gamma={gamma} x={x} y={y}', 'series',
                      specfun.mp_bilinear_closed(mu, gamma, x, y, t1, t2), series.value, tolerance=1e-8)

    t = 0.5 * cmath.exp(0.25j * math.pi)
    for cc, nu, u in ((1.5 + 0.8j, 1.2, 0.9), (1.25, 0.5, 2.0)):
        yy = 1.0 - cmath.exp(-2j * math.pi / 3)
        with c.case('Laguerre generating function', 'series', _LAGUERRE_GENERATING):
            series = specfun.laguerre_gen_series(t, cc, nu, yy, u)
            c.compare(f'Laguerre generating sum at c={cc} nu={nu} u={u}', 'series',
                      specfun.laguerre_gen_closed(t, cc, nu, yy, u), series.value, tolerance=1e-8)

    return c.reports


def _compare_mp_routes(c:   ReportCollector,
                       m:   int,
                       p:   specfun.MPPolyParams,
                       xs:  numpy.ndarray,
                       rec: numpy.ndarray) -> None:
    """
    Reports the worst point of the grid. The terminating sum is accurate to about epsilon times its
    cancellation scale, which for large degrees and large ``|x|`` exceeds the value by orders of magnitude;
    the comparison floor is raised to that scale.
    """
    worst: typing.Optional[typing.Tuple[float, int, float, float]] = None
    for k, x in enumerate(xs):
        hyp = specfun.mp_poly_hyp(m, p, float(x))
        allowance = 64.0 * _EPSILON * specfun.mp_poly_hyp_cancellation_scale(m, p, float(x))
        floor = max(1.0, allowance / 1e-10)
        ratio = abs(float(rec[k]) - hyp) / max(abs(float(rec[k])), abs(hyp), floor)
        if worst is None or ratio > worst[0]:
            worst = ratio, k, hyp, floor
    assert worst is not None
    _, k, hyp, floor = worst
    c.compare(f'P_{m}^({p.lam})(x; {p.theta:.6f}) at x={xs[k]:g}, the worst of {len(xs)} points',
              'hypergeometric representation', float(rec[k]), hyp, tolerance=1e-10, floor=floor)


def gk_model_suite(options: SuiteOptions = SuiteOptions()) -> typing.List[VerificationReport]:
    c = ReportCollector('gk_model')

    for rho, kappa0 in ((1.0, 1.0), (2.0, 0.5), (0.3, 3.0)):
        p = gk_model.GKParams.from_physical(rho, kappa0)
        for m in (0, 4):
            with c.case('spectrum shift', 'physical parametrization', _GK_SPECTRUM):
                shift = gk_model.eigenvalue(p, m) - gk_model.eigenvalue_physical(rho, kappa0, m)
                c.compare(f'lambda_{m} - lambda_{m}^phys = 2 rho at rho={rho} kappa0={kappa0}',
                          'physical parametrization', shift, 2.0 * rho, tolerance=1e-12, floor=1.0)

    m_max = 20
    for gamma in (1.8, 2.5, 3.5):
        for beta in (0.5, 1.0, 2.0):
            with c.case('orthonormality', 'composite Gauss-Legendre', _GK_BASIS):
                p = gk_model.GKParams.from_gamma(gamma, beta)
                cutoff = math.sqrt((4.0 * m_max + 2.0 * gamma + 80.0) / beta)
                # Graded panels resolve the ξ^{2γ-1} behaviour of the products at the origin.
                edges = numpy.concatenate([[0.0, 1e-4, 1e-3, 1e-2], numpy.arange(0.1, cutoff, 0.25), [cutoff]])
                nodes, weights = specfun.gauss_legendre_composite(edges, 24)
                table = gk_model.basis_table(p, m_max, nodes)
                gram = (table * weights) @ table.T
                c.at_most(f'max |<psi_m|psi_j> - delta_mj| at gamma={gamma} beta={beta}', 'composite Gauss-Legendre',
                          float(numpy.max(numpy.abs(gram - numpy.eye(m_max + 1)))), 1e-8)

    for gamma in (2.5, 3.5):
        p = gk_model.GKParams.from_gamma(gamma, 1.0)
        for m in range(4):
            with c.case('eigenvalue equation', 'second differences', _GK_SPECTRUM):
                c.at_most(f'relative residual of psi_{m} at gamma={gamma}', 'second differences',
                          gk_model.eigen_residual(p, m), 1e-4)

    p = gk_model.GKParams.from_gamma(1.8, 0.5)
    for m in (1, 5, 12):
        for xi in (0.6, 1.7, 4.0):
            with c.case('standard form', 'terminating 1F1', _GK_STANDARD_FORM):
                c.compare(f'psi_{m}({xi})', 'terminating 1F1', gk_model.eigenfunction(p, m, xi),
                          gk_model.eigenfunction_hypergeometric(p, m, xi), tolerance=1e-9, floor=1e-4)

    with c.case('zero count', 'sign changes', _OSCILLATION):
        signs = numpy.sign(gk_model.basis_table(p, 5, numpy.linspace(1e-3, 15.0, 20001)))
        for m in range(6):
            s = signs[m][signs[m] != 0]
            c.compare(f'psi_{m} has {m} zeros', 'sign changes', int(numpy.count_nonzero(s[1:] != s[:-1])), m,
                      tolerance=0.0)

    return c.reports


def coherent_suite(options: SuiteOptions = SuiteOptions()) -> typing.List[VerificationReport]:
    c = ReportCollector('coherent')

    with c.case('weight', 'analytic', _CS_WEIGHTS):
        lab = coherent.CSLabel(0.0, math.pi / 2, 0.1, gk_model.GKParams.from_gamma(2.0, 1.0))
        c.compare('sigma_1 = 2 e^0.8 at gamma=2 beta=1 epsilon=0.1', 'analytic', coherent.sigma(lab, 1),
                  2.0 * math.exp(0.8), tolerance=1e-13)

    p = gk_model.GKParams.from_gamma(2.5, 1.0)
    for theta in (math.pi / 3, math.pi / 2):
        for x in (-1.0, 0.0, 1.5):
            lab = coherent.CSLabel(x, theta, 0.1, p)
            with c.case('normalization', 'bilinear series', _CS_NORMALIZATION):
                closed = coherent.normalization_closed(lab)
                c.compare(f'N({x}) at theta={theta:.6f}', 'bilinear series', closed,
                          coherent.normalization_series(lab).real, tolerance=1e-8)
            with c.case('flip symmetry of N', 'reflected label', _CS_REFLECTION):
                c.compare(f'N({x}, theta) = N(-x, pi-theta) at theta={theta:.6f}', 'reflected label',
                          coherent.normalization_closed(lab.flipped()), closed, tolerance=1e-9)
            with c.case('flip symmetry of the weight', 'reflected label', _CS_REFLECTION):
                c.compare(f'Upsilon({x}, theta) = Upsilon(-x, pi-theta) at theta={theta:.6f}', 'reflected label',
                          coherent.upsilon(math.pi - theta, p.gamma, -x), coherent.upsilon(theta, p.gamma, x),
                          tolerance=1e-12)

    for theta in (math.pi / 3, math.pi / 2, 2 * math.pi / 3):
        with c.case('unit mass of the weight', 'composite Gauss-Legendre', _MP_WEIGHT):
            nodes, weights = specfun.gauss_legendre_composite(numpy.linspace(-40.0, 40.0, 161), 20)
            c.compare(f'integral of Upsilon at theta={theta:.6f}', 'composite Gauss-Legendre',
                      float(numpy.sum(weights * coherent.upsilon(theta, p.gamma, nodes))), 1.0, tolerance=1e-10)

    xi = numpy.array([0.1, 0.5, 1.0, 1.7, 2.5, 3.5])
    for x, theta in ((0.0, math.pi / 2), (1.5, math.pi / 3), (-2.0, 2 * math.pi / 3)):
        with c.case('wavefunction', 'eigenfunction series', _CS_WAVEFUNCTION):
            lab = coherent.CSLabel(x, theta, 0.1, p)
            closed = coherent.cs_wavefunction_closed(lab, xi)
            series = coherent.cs_wavefunction_series(lab, xi)
            scale = max(1.0, float(numpy.max(numpy.abs(series))))
            c.at_most(f'max |closed - series| / scale at x={x} theta={theta:.6f}', 'eigenfunction series',
                      float(numpy.max(numpy.abs(closed - series))) / scale, 1e-8)

    with c.case('state norm', 'composite Gauss-Legendre', _CS_WAVEFUNCTION):
        lab = coherent.CSLabel(0.7, math.pi / 2, 0.1, p)
        nodes, weights = specfun.gauss_legendre_composite(numpy.linspace(0.0, 10.0, 41), 24)
        psi = coherent.cs_wavefunction_closed(lab, nodes)
        c.compare('|| |x, epsilon> ||² at x=0.7', 'composite Gauss-Legendre',
                  float(numpy.sum(weights * numpy.abs(psi) ** 2)), 1.0, tolerance=1e-6)

    base = coherent.CSLabel(0.0, 2 * math.pi / 3, 0.1, gk_model.GKParams.from_gamma(1.8, 1.0))
    labels = [base.with_x(x) for x in (-3.0, -1.2, -0.4, 0.0, 0.9, 2.5)]
    with c.case('overlap matrix', 'eigenvalues', _CS_OVERLAP):
        g = coherent.overlap_matrix(labels)
        c.at_most('-min eigenvalue of the overlap matrix', 'eigenvalues',
                  -float(numpy.min(numpy.linalg.eigvalsh(g))), 1e-8)
        c.compare('overlap diagonal', 'unit', float(numpy.max(numpy.abs(numpy.diag(g) - 1.0))), 0.0,
                  tolerance=0.0, floor=1.0)
    for a, b in ((labels[1], labels[4]), (labels[3], labels[5])):
        with c.case('overlap', 'bilinear series', _CS_OVERLAP):
            closed = coherent.overlap(a, b)
            c.compare(f'<{a.x}|{b.x}>', 'bilinear series', closed, coherent.overlap_series(a, b).value,
                      tolerance=1e-7, floor=1e-2)
        with c.case('flip symmetry of the overlap', 'reflected labels', _CS_REFLECTION):
            c.compare(f'<{a.x}|{b.x}> under reflection', 'reflected labels',
                      coherent.overlap(a.flipped(), b.flipped()), closed, tolerance=1e-8, floor=1e-2)

    return c.reports


def resolution_suite(options: SuiteOptions = SuiteOptions()) -> typing.List[VerificationReport]:
    c = ReportCollector('resolution')

    for gamma in (1.8, 2.5):
        for theta in (math.pi / 3, 2 * math.pi / 3):
            with c.case('MP orthogonality', 'analytic', _MP_ORTHOGONALITY):
                got = resolution.orthogonality_matrix(8, gamma, theta)
                expected = resolution.orthogonality_expected(8, gamma)
                norm = numpy.sqrt(numpy.outer(numpy.diag(expected), numpy.diag(expected)))
                c.at_most(f'max relative deviation of I_mj at gamma={gamma} theta={theta:.6f}', 'analytic',
                          float(numpy.max(numpy.abs(got - expected) / norm)), 1e-6)

    for rho, a, b in ((0.3, 0.1, 5.0), (0.6, 1.0, 1.0), (0.9, 5.0, 0.1)):
        with c.case('Laguerre kernel', 'bilinear series', _HARDY_HILLE):
            series = resolution.bilinear_kernel_series(rho, 2.5, a, b, tol=1e-13)
            c.compare(f'K({rho}; {a}, {b})', 'bilinear series', resolution.bilinear_kernel_closed(rho, 2.5, a, b),
                      series.real, tolerance=1e-8, floor=1e-3 * math.exp(0.5 * (a + b)))

    p = gk_model.GKParams.from_gamma(2.5, 1.0)
    u = numpy.linspace(0.2, 4.0, 9)
    for n in (0, 1, 4, 8):
        with c.case('diagonal action', 'spectral damping', _SPECTRAL_DAMPING):
            phi = resolution.EigenCombination([0.0] * n + [1.0], p)
            got = resolution.apply_O_epsilon(math.pi / 2, 2.5, 1.0, 0.05, phi, u)
            c.at_most(f'max |O_eps psi_{n} - e^(-2 beta (2n+gamma) eps) psi_{n}|', 'spectral damping',
                      float(numpy.max(numpy.abs(got - phi.apply_exact(0.05, u)))), 1e-7)

    with c.case('kernel form of O_eps', 'eigenfunction expansion', _KERNEL_FORM):
        phi_bump = resolution.SmoothBump()
        uu = numpy.array([1.3, 1.6])
        a_ = resolution.apply_O_epsilon_kernel(1.0, 2.5, 1.0, 0.1, phi_bump, uu)
        b_ = resolution.apply_O_epsilon(1.0, 2.5, 1.0, 0.1, phi_bump, uu)
        for k in range(len(uu)):
            c.compare(f'O_eps bump at u={uu[k]}', 'eigenfunction expansion', float(a_[k]), float(b_[k]),
                      tolerance=1e-6, floor=1e-6)

    ladder = list(options.eps_ladder)
    with c.case('Poisson limit', 'finite-rank input', _POISSON_LIMIT):
        phi = resolution.EigenCombination([1.0, 1.0], p)
        trace = resolution.poisson_limit_experiment(2.5, 1.0, phi, ladder)
        c.compare('errors strictly decrease', 'finite-rank input', float(trace.strictly_decreasing), 1.0,
                  tolerance=0.0, detail=f'errors={list(trace.errors)}')
        c.compare('error linear in epsilon within 20%', 'finite-rank input', float(trace.check_linear(0.2)), 1.0,
                  tolerance=0.0, detail=f'constant={trace.linear_constant():.6g}')

    # Smooth and discontinuous inputs are not in the linear regime on a desk-scale ladder; only the monotone
    # decrease is asserted for them.
    for name, phi_l2 in (('smooth bump', resolution.SmoothBump()), ('indicator', resolution.Indicator())):
        with c.case('Poisson limit', name, _POISSON_LIMIT):
            trace = resolution.poisson_limit_experiment(2.5, 1.0, phi_l2, ladder)
            c.compare(f'errors strictly decrease for the {name}', name, float(trace.strictly_decreasing), 1.0,
                      tolerance=0.0, detail=f'errors={list(trace.errors)}')

    return c.reports


SUITES: typing.Dict[str, typing.Callable[[SuiteOptions], typing.List[VerificationReport]]] = {
    'specfun':    specfun_suite,
    'gk_model':   gk_model_suite,
    'coherent':   coherent_suite,
    'resolution': resolution_suite,
}
"""
Suite names in the order they are executed.
"""


def run_suites(names:   typing.Optional[typing.Iterable[str]] = None,
               options: SuiteOptions = SuiteOptions()) -> typing.List[VerificationReport]:
    """
    Runs the named suites (all by default) in the fixed order of :data:`SUITES`, regardless of the order of
    ``names``. Unknown names raise :class:`ValueError`.

    >>> run_suites(['no-such-suite'])
    Traceback (most recent call last):
    ...
    ValueError: ...
    """
    selected = set(SUITES) if names is None else set(names)
    unknown = selected - set(SUITES)
    if unknown:
        raise ValueError(f'Unknown suites: {sorted(unknown)}; available: {list(SUITES)}')
    out: typing.List[VerificationReport] = []
    for name, suite in SUITES.items():
        if name in selected:
            reports = suite(options)
            failed = sum(1 for r in reports if not r.passed)
            _logger.info('Suite %r: %d reports, %d failed', name, len(reports), failed)
            out += reports
    return out


def _unittest_suites() -> None:
    for name in ('specfun', 'gk_model'):
        reports = run_suites([name])
        assert reports
        assert all(r.module == name for r in reports)
        assert all(r.identity for r in reports)
        assert all(r.passed for r in reports), [str(r) for r in reports if not r.passed]


def _unittest_mp_routes_on_the_full_grid() -> None:
    # Degrees 0 to 40 at every (lambda, theta) pair, one report per degree, each the worst of 21 points.
    reports = [r for r in specfun_suite() if r.reference == 'hypergeometric representation']
    assert len(reports) == 3 * 3 * 41
    assert all(r.passed for r in reports), [str(r) for r in reports if not r.passed]
    assert all('the worst of 21 points' in r.invariant for r in reports)


def _unittest_suite_options() -> None:
    from pytest import raises

    assert SuiteOptions(eps_ladder=[0.2, 0.1]).eps_ladder == (0.2, 0.1)  # type: ignore
    bad_ladders: typing.List[typing.Tuple[float, ...]] = [(), (0.1, 0.1), (0.1, -0.05), (0.01, 0.1)]
    for bad in bad_ladders:
        with raises(ValueError):
            SuiteOptions(eps_ladder=bad)
