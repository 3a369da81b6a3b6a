# -*- coding: utf-8 -*-
# Copyright (C) 2023 The sliceforge authors
#
# SPDX-License-Identifier: GPL-3.0-or-later
#
# This program is free software: you can redistribute it and/or modify
# it under the terms of the GNU General Public License as published by
# the Free Software Foundation, either version 3 of the License, or
# (at your option) any later version.
#
# This program is distributed in the hope that it will be useful,
# but WITHOUT ANY WARRANTY; without even the implied warranty of
# MERCHANTABILITY or FITNESS FOR A PARTICULAR PURPOSE.  See the
# GNU General Public License for more details.
#
# You should have received a copy of the GNU General Public License
# along with this program.  If not, see <http://www.gnu.org/licenses/>.

from argparse import Namespace
from concurrent.futures import ThreadPoolExecutor
from typing import Any, Callable, Dict, List, Sequence, Tuple

import numpy as np

from sliceforge.cauchy import (
    ContourSpec,
    cauchy_eval,
    cauchy_kernel,
    coeff_extract,
    kernel_derivative,
    kernel_forms,
)
from sliceforge.clifford import (
    CliffordNumber,
    Paravector,
    clifford_mul,
    multiply_components,
    paravector_inverse,
    sphere_sample,
)
from sliceforge.config import RunConfig, worker_count
from sliceforge.growth import (
    classify,
    coeff_type_estimate,
    growth_type_estimate,
    remark_identity_residual,
    star_constant,
    verify_derivative_norm_bound,
    verify_logshift_equivalence,
    verify_monomial_norm_bound,
    verify_star_norm_bound,
)
from sliceforge.operators import (
    CLASS_D,
    CLASS_D0,
    AbstractOperator,
    BoundCertificate,
    InfOrderOperator,
    certify_class_D,
    certify_class_D0,
    check_growth_domination,
    default_grid,
    recheck,
    representation_identity_check,
    verify_continuity_estimate,
    verify_reconstruction,
    verify_telescoping,
)
from sliceforge.proximate import LemmaGrid, ProximateOrder, verify_lemma_suite
from sliceforge.report import VerificationReport, all_passed
from sliceforge.series import SliceSeries
from sliceforge.superosc import (
    b_scan,
    build_Fn,
    choose_truncations,
    compare_evolution,
    convergence_measure,
    default_x_grid,
    imag_levels,
)
from sliceforge.terminal import info

from .helper import announce, norm_grid, proximate_order, reports_document

Suite = Callable[[RunConfig, Namespace], List[VerificationReport]]

CLIFFORD_DIMENSIONS = (1, 2, 3, 4)
SUBMULTIPLICATIVE_PAIRS = 10_000
ASSOCIATIVITY_TOLERANCE = 1e-13
PRODUCT_TOLERANCE = 1e-14
REMARK_TOLERANCE = 1e-9
KERNEL_FORM_TOLERANCE = 1e-11
KERNEL_STEP = 1e-5
KERNEL_DERIVATIVE_TOLERANCE = 1e-6

RHO_ONE = ProximateOrder.constant(1.0)
TYPE_SAMPLES = (0.5, 1.0, 2.0)
STAR_DEGREE = 3
SUPEROSC_ORDERS = (5, 10, 20, 40, 80)
SUPEROSC_A = 2.0
SUPEROSC_T = 0.3
EVOLUTION_ORDER = 2
EVOLUTION_TIME = 0.1


def _bounded(
    lemma: str,
    worst: float,
    tolerance: float,
    params: Dict[str, Any],
    grid: Dict[str, Any],
) -> VerificationReport:
    return VerificationReport(
        lemma=lemma,
        params=params,
        empirical_constant=worst,
        max_violation=max(0.0, worst - tolerance),
        passed=bool(worst <= tolerance),
        grid=grid,
        details={'tolerance': tolerance},
    )


def _norms(components: np.ndarray) -> np.ndarray:
    return np.linalg.norm(components, axis=-1)


def check_associativity(
    rng: np.random.Generator, trials: int
) -> VerificationReport:
    worst = 0.0
    for n in CLIFFORD_DIMENSIONS:
        a, b, c = rng.standard_normal((3, trials, 1 << n))
        left = multiply_components(multiply_components(a, b), c)
        right = multiply_components(a, multiply_components(b, c))
        errors = _norms(left - right) / (_norms(a) * _norms(b) * _norms(c))
        worst = max(worst, float(np.max(errors)))
    return _bounded(
        'clifford-associativity',
        worst,
        ASSOCIATIVITY_TOLERANCE,
        {'n': list(CLIFFORD_DIMENSIONS)},
        {'trials': trials},
    )


def check_anticommutation() -> VerificationReport:
    """
    e_i e_j + e_j e_i = 0 for i != j and e_i² = -1, exactly
    """
    worst = 0.0
    for n in CLIFFORD_DIMENSIONS:
        units = [CliffordNumber.basis(n, i) for i in range(1, n + 1)]
        for i, first in enumerate(units):
            worst = max(worst, (clifford_mul(first, first) + 1.0).norm())
            for second in units[i + 1 :]:
                worst = max(
                    worst,
                    (
                        clifford_mul(first, second)
                        + clifford_mul(second, first)
                    ).norm(),
                )
    return _bounded(
        'clifford-anticommutation',
        worst,
        0.0,
        {'n': list(CLIFFORD_DIMENSIONS)},
        {},
    )


def check_sphere_units(count: int, seed: int) -> VerificationReport:
    worst = 0.0
    for n in CLIFFORD_DIMENSIONS:
        for j in sphere_sample(n, count, seed):
            unit = j.as_clifford()
            worst = max(
                worst,
                (clifford_mul(unit, unit) + 1.0).norm(),
                abs(unit.norm() - 1.0),
            )
    return _bounded(
        'imaginary-units',
        worst,
        PRODUCT_TOLERANCE,
        {'n': list(CLIFFORD_DIMENSIONS)},
        {'count': count, 'seed': seed},
    )


def check_paravectors(
    rng: np.random.Generator, trials: int
) -> List[VerificationReport]:
    """
    x x̄ = |x|² and x x^-1 = 1 on random paravectors
    """
    conjugate_error, inverse_error = 0.0, 0.0
    for n in CLIFFORD_DIMENSIONS:
        for _ in range(trials):
            x = Paravector(rng.standard_normal(), rng.standard_normal(n))
            square = x.norm() ** 2
            product = clifford_mul(x.as_clifford(), x.conjugate().as_clifford())
            inverse = clifford_mul(
                x.as_clifford(), paravector_inverse(x).as_clifford()
            )
            conjugate_error = max(
                conjugate_error, (product - square).norm() / square
            )
            inverse_error = max(inverse_error, (inverse - 1.0).norm())
    params = {'n': list(CLIFFORD_DIMENSIONS)}
    grid = {'trials': trials}
    return [
        _bounded(
            'paravector-conjugate',
            conjugate_error,
            ASSOCIATIVITY_TOLERANCE,
            params,
            grid,
        ),
        _bounded(
            'paravector-inverse', inverse_error, PRODUCT_TOLERANCE, params, grid
        ),
    ]


def check_submultiplicative(rng: np.random.Generator) -> VerificationReport:
    """
    |ab| <= 2^(n/2) |a| |b|, reported as the largest share of the bound
    """
    worst = 0.0
    for n in CLIFFORD_DIMENSIONS:
        a, b = rng.standard_normal((2, SUBMULTIPLICATIVE_PAIRS, 1 << n))
        ratios = _norms(multiply_components(a, b)) / (_norms(a) * _norms(b))
        worst = max(worst, float(np.max(ratios)) / 2 ** (n / 2))
    return _bounded(
        'clifford-submultiplicative',
        worst,
        1.0,
        {'n': list(CLIFFORD_DIMENSIONS)},
        {'pairs': SUBMULTIPLICATIVE_PAIRS},
    )


def clifford_suite(
    config: RunConfig, _args: Namespace
) -> List[VerificationReport]:
    rng = np.random.default_rng(config['seed'])
    return [
        check_associativity(rng, config['trials']),
        check_anticommutation(),
        check_sphere_units(config['directions'], config['seed']),
        *check_paravectors(rng, config['trials']),
        check_submultiplicative(rng),
    ]


def proximate_suite(
    config: RunConfig, args: Namespace
) -> List[VerificationReport]:
    po = proximate_order(args)
    grid = LemmaGrid(points=config['lemma_points'], ell_max=config['ell_max'])
    reports = verify_lemma_suite(po, grid)

    limits = {**po.check_proximate(), 'normalized': po.is_normalized()}
    reports.append(
        VerificationReport(
            lemma='proximate-limits',
            params=po.to_json(),
            empirical_constant=0.0,
            max_violation=0.0,
            passed=all(limits.values()),
            details=limits,
        )
    )
    return reports


def monomial_norm_suite(
    config: RunConfig, args: Namespace
) -> List[VerificationReport]:
    po = proximate_order(args)
    grid = norm_grid(config)
    reports = [
        verify_monomial_norm_bound(po, 1.0, sigma_prime, config['ell_max'])
        for sigma_prime in (0.25, 0.5, 0.75)
    ]
    exponential = SliceSeries.exponential(1, 1.0, 40)
    reports.extend(
        verify_derivative_norm_bound(exponential, RHO_ONE, sigma, 6, grid=grid)
        for sigma in (1.2, 2.4)
    )
    reports.append(
        verify_logshift_equivalence(
            SliceSeries.monomial(1, 30),
            RHO_ONE,
            2.0,
            1.0,
            grid,
            tolerance=config['logshift_tolerance'],
        )
    )
    return reports


def type_suite(config: RunConfig, _args: Namespace) -> List[VerificationReport]:
    """
    Truncated exponentials e^(σ0 x) have order 1 and type σ0
    """
    n, N = config['n'], config['N']  # pylint: disable=invalid-name
    tolerance = config['type_tolerance']
    grid = norm_grid(config)

    reports = []
    for sigma0 in TYPE_SAMPLES:
        f = SliceSeries.exponential(n, sigma0, N)
        estimate = coeff_type_estimate(f, RHO_ONE)
        growth = growth_type_estimate(f, RHO_ONE, grid=grid)
        residual = remark_identity_residual(f, RHO_ONE)
        deviation = abs(estimate.implied_type / sigma0 - 1.0)
        if estimate.implied_type > 0:
            agreement = growth.value / estimate.implied_type
            agrees = abs(agreement - 1.0) <= tolerance
        else:
            agreement, agrees = None, False
        reports.append(
            VerificationReport(
                lemma='type-estimate',
                params={**RHO_ONE.to_json(), 'sigma0': sigma0, 'n': n},
                empirical_constant=estimate.implied_type,
                max_violation=deviation,
                passed=bool(
                    deviation <= tolerance
                    and agrees
                    and estimate.consistent
                    and residual <= REMARK_TOLERANCE
                ),
                grid={'N': N, **grid.to_json()},
                details={
                    'coefficients': estimate.to_json(),
                    'growth': growth.to_json(),
                    'agreement': agreement,
                    'remark_residual': residual,
                },
            )
        )

    rng = np.random.default_rng(config['seed'])
    polynomial = coeff_type_estimate(SliceSeries.random(n, 8, rng), RHO_ONE)
    reports.append(
        VerificationReport(
            lemma='polynomial-type',
            params={**RHO_ONE.to_json(), 'n': n},
            empirical_constant=polynomial.implied_type,
            max_violation=polynomial.implied_type,
            passed=polynomial.implied_type == 0.0,
        )
    )

    f = SliceSeries.exponential(n, 1.0, N)
    above, below = classify(f, RHO_ONE, 2.0), classify(f, RHO_ONE, 0.5)
    reports.append(
        VerificationReport(
            lemma='classification',
            params={**RHO_ONE.to_json(), 'sigma0': 1.0, 'n': n},
            empirical_constant=above.type_estimate.implied_type,
            max_violation=0.0,
            passed=bool(
                above.in_space
                and above.in_space_plus_zero
                and not below.in_space
                and not below.in_space_plus_zero
                and below.finite_type
            ),
            details={'above': above.to_json(), 'below': below.to_json()},
        )
    )
    return reports


def star_norm_suite(
    config: RunConfig, args: Namespace
) -> List[VerificationReport]:
    """
    ‖f ⋆ g‖_{ϱ,2} <= 2^((n+4)/2) ‖f‖_{ϱ,1} ‖g‖_{ϱ,1} on random Clifford
    polynomial pairs
    """
    n, trials = config['n'], config['trials']
    po = proximate_order(args)
    grid = norm_grid(config)
    rng = np.random.default_rng(config['seed'])
    pairs = [
        (
            SliceSeries.random(n, STAR_DEGREE, rng),
            SliceSeries.random(n, STAR_DEGREE, rng),
        )
        for _ in range(trials)
    ]

    def check(pair: Tuple[SliceSeries, SliceSeries]) -> VerificationReport:
        return verify_star_norm_bound(pair[0], pair[1], po, 1.0, 1.0, grid)

    with ThreadPoolExecutor(max_workers=worker_count(len(pairs))) as pool:
        results = list(pool.map(check, pairs))

    return [
        VerificationReport(
            lemma='star-norm',
            params={**po.to_json(), 'sigma': 1.0, 'tau': 1.0, 'n': n},
            empirical_constant=max(
                (report.empirical_constant for report in results), default=0.0
            ),
            max_violation=max(
                (report.max_violation for report in results), default=0.0
            ),
            passed=all_passed(results),
            grid={**grid.to_json(), 'trials': trials},
            details={'bound': star_constant(n)},
        )
    ]


def _kernel_pairs(
    rng: np.random.Generator, n: int, count: int
) -> List[Tuple[Paravector, Paravector]]:
    # pairs well away from the singular set x ∈ [s]
    pairs = []
    while len(pairs) < count:
        s = Paravector(rng.uniform(-2, 2), rng.uniform(-2, 2, n))
        x = Paravector(rng.uniform(-2, 2), rng.uniform(-2, 2, n))
        gap = abs(s.x0 - x.x0) + abs(
            np.linalg.norm(s.vec) - np.linalg.norm(x.vec)
        )
        if gap > 0.1:
            pairs.append((s, x))
    return pairs


def cauchy_suite(
    config: RunConfig, _args: Namespace
) -> List[VerificationReport]:
    n, trials = config['n'], config['trials']
    tolerance = config['quadrature_tolerance']
    rng = np.random.default_rng(config['seed'])
    params = {'n': n}

    f = SliceSeries.random(n, 20, rng)
    extraction = max(
        float(np.max(np.abs(coeff_extract(f, ell).coeffs - f.coeffs[ell])))
        for ell in range(f.N + 1)
    )

    contour = ContourSpec(radius=2.0, nodes=config['nodes'])
    g = SliceSeries.random(n, 10, rng)
    evaluation = 0.0
    for _ in range(trials):
        direction = rng.standard_normal(n + 1)
        point = direction / np.linalg.norm(direction) * rng.uniform(0.0, 1.0)
        x = Paravector(point[0], point[1:])
        expected = g(x)
        value = cauchy_eval(g, x, contour)
        evaluation = max(
            evaluation, (value - expected).norm() / max(1.0, expected.norm())
        )

    forms, derivatives = 0.0, 0.0
    for s, x in _kernel_pairs(rng, n, trials):
        left, right = kernel_forms(np.concatenate([[s.x0], s.vec])[None], x)
        forms = max(
            forms,
            float(np.linalg.norm(left[0] - right[0]))
            / max(1.0, float(np.linalg.norm(right[0]))),
        )
        for i in range(n + 1):
            step = np.zeros(n + 1)
            step[i] = KERNEL_STEP
            shift = Paravector(step[0], step[1:])
            difference = (
                cauchy_kernel(s, x + shift) - cauchy_kernel(s, x - shift)
            ) / (2 * KERNEL_STEP)
            exact = kernel_derivative(s, x, i)
            derivatives = max(
                derivatives,
                (difference - exact).norm() / max(1.0, exact.norm()),
            )

    return [
        _bounded(
            'coefficient-extraction',
            extraction,
            tolerance,
            params,
            {'N': f.N, 'radius': 1.0},
        ),
        _bounded(
            'cauchy-formula',
            evaluation,
            tolerance,
            params,
            {'trials': trials, 'radius': 2.0, 'nodes': config['nodes']},
        ),
        _bounded(
            'kernel-forms',
            forms,
            KERNEL_FORM_TOLERANCE,
            params,
            {'trials': trials},
        ),
        _bounded(
            'kernel-derivative',
            derivatives,
            KERNEL_DERIVATIVE_TOLERANCE,
            params,
            {'trials': trials, 'step': KERNEL_STEP},
        ),
    ]


def operators_suite(
    config: RunConfig, _args: Namespace
) -> List[VerificationReport]:
    n = config['n']
    translation = AbstractOperator.translation(n, 0.7)
    derivative = AbstractOperator.derivative(n)
    operators = (
        AbstractOperator.identity(n),
        translation,
        derivative,
        AbstractOperator.composition(translation, derivative),
    )
    reports = [
        representation_identity_check(
            T,
            config['L'],
            config['M'],
            trials=config['trials'],
            seed=config['seed'],
            tolerance=config['identity_tolerance'],
        )
        for T in operators
    ]
    rng = np.random.default_rng(config['seed'])
    P = InfOrderOperator(
        [SliceSeries.random(n, 3, rng) for _ in range(config['L'] + 1)]
    )
    reports.append(
        verify_reconstruction(P, tolerance=config['reconstruction_tolerance'])
    )
    reports.append(verify_telescoping())
    reports.append(
        check_growth_domination(ProximateOrder.logshift(1.0, 0.5), RHO_ONE)
    )
    return reports


def certificate_report(
    kind: str, P: InfOrderOperator, certificates: Sequence[BoundCertificate]
) -> VerificationReport:
    statuses = [certificate.status for certificate in certificates]
    failed = statuses.count('fail')
    constants = [
        certificate.constant
        for certificate in certificates
        if certificate.passed
    ]
    return VerificationReport(
        lemma=f'class-{kind}',
        params={'L': P.L, 'n': P.n, 'truncated': P.truncated},
        empirical_constant=max(constants, default=0.0),
        max_violation=float(failed),
        passed=not failed and bool(constants),
        details={
            'inconclusive': statuses.count('inconclusive'),
            'extrapolated': sum(
                certificate.extrapolated for certificate in certificates
            ),
            'certificates': [
                certificate.to_json() for certificate in certificates
            ],
        },
    )


def certificates_suite(
    config: RunConfig, _args: Namespace
) -> List[VerificationReport]:
    n = config['n']
    grid = norm_grid(config)
    values = default_grid(
        config['grid_points'], config['grid_min'], config['grid_max']
    )
    P = InfOrderOperator.translation(n, 1.0, config['L'])

    class_d = certify_class_D(P, values, values, grid=grid)
    class_d0 = certify_class_D0(P, values, values, grid=grid)
    reports = [
        certificate_report(CLASS_D, P, class_d),
        certificate_report(CLASS_D0, P, class_d0),
        recheck(P, class_d, values, values, grid),
    ]

    shift = InfOrderOperator.translation(n, 0.5, 10)
    certificate = certify_class_D(shift, [0.1], [0.5], grid=grid)[0]
    if certificate.passed:
        reports.append(
            verify_continuity_estimate(
                shift,
                SliceSeries.exponential(n, 1.0, 30),
                2.0,
                certificate,
                grid=grid,
            )
        )
    else:
        reports.append(certificate_report(CLASS_D, shift, [certificate]))
    return reports


def superosc_suite(
    config: RunConfig, _args: Namespace
) -> List[VerificationReport]:
    x_grid = default_x_grid(config['window'], config['step'])
    table = convergence_measure(
        SUPEROSC_ORDERS,
        SUPEROSC_A,
        SUPEROSC_T,
        b_scan(SUPEROSC_A),
        x_grid,
        imag_levels(config['imag_extent']),
    )

    tolerance = config['evolution_tolerance']
    w = build_Fn(EVOLUTION_ORDER, SUPEROSC_A)
    M, N, _ = choose_truncations(  # pylint: disable=invalid-name
        w, EVOLUTION_TIME, config['window'], tolerance
    )
    comparison = compare_evolution(
        w, EVOLUTION_TIME, M, N, x_grid, tolerance=tolerance
    )
    evolution = VerificationReport(
        lemma='operator-evolution',
        params={
            'n': EVOLUTION_ORDER,
            'a': SUPEROSC_A,
            't': EVOLUTION_TIME,
        },
        empirical_constant=comparison.max_deviation,
        max_violation=max(
            0.0, comparison.max_deviation - comparison.bound - tolerance
        ),
        passed=comparison.passed,
        grid={'window': config['window'], 'step': config['step']},
        details=comparison.to_json(),
    )
    return [table.check(), evolution]


SUITES: Dict[str, Suite] = {
    'clifford': clifford_suite,
    'proximate-order': proximate_suite,
    'monomial-norm': monomial_norm_suite,
    'type': type_suite,
    'star-norm': star_norm_suite,
    'cauchy': cauchy_suite,
    'operators': operators_suite,
    'certificates': certificates_suite,
    'superosc': superosc_suite,
}


def verify(
    config: RunConfig, args: Namespace
) -> Tuple[bool, Dict[str, Any]]:
    names = tuple(SUITES) if args.suite == 'all' else (args.suite,)
    suites = {}
    for name in names:
        info(name)
        suites[name] = reports_document(announce(SUITES[name](config, args)))
    passed = all(suite['pass'] for suite in suites.values())
    return passed, {
        'command': 'verify',
        'seed': config['seed'],
        'suites': suites,
        'pass': passed,
    }
