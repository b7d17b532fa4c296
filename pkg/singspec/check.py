"""The invariant suite run by `singspec check`: every identity that has to hold
for the input, each reported as passed or failed rather than raised."""

import itertools
import math
import logging
from fractions import Fraction
from typing import Any, List, Mapping, NamedTuple, Optional, Tuple

from . import document as documents
from .exc_geometry import exhaustive_support_check, h0_h1, k_sheaf, spectrum
from .multiplier import (
    denominators_divide_lcm,
    jumping_candidates,
    lct,
    omega_quotient_dims,
    punctual_jumping_numbers,
)
from .nc_engine import (
    InexactPsiPieces,
    NCModel,
    PsiPieceQuery,
    d_alpha_nc,
    jumping_nc,
    monomial_v_order,
    multiplier_nc,
    next_jump,
    psi_localized_dims,
    v_generator,
)
from .monomial import MonomialIdeal
from .oracles import RootSet, cross_check_milnor_delta, elsv_check, nc_bfunction_roots, qh_bfunction_roots, qh_spectrum
from .resolution import (
    ResolutionData,
    from_newton,
    from_proximity_document,
    milnor_number,
    quasi_homogeneous_proximity,
    same_resolution,
    validate,
)

logger = logging.getLogger(__name__)

# Normal crossing identities are checked at jumping numbers up to this bound.
NC_CHECK_BOUND = Fraction(3)

class CheckResult(NamedTuple):
    name: str
    passed: bool
    detail: str = ""


def _frac_part(value: Fraction) -> Fraction:
    # representative in (0,1]
    remainder = value - (value.numerator // value.denominator)
    return remainder if remainder else Fraction(1)

def nc_checks(model: NCModel) -> List[CheckResult]:
    jumps = jumping_nc(model, NC_CHECK_BOUND)
    results = []

    mismatched = [
        alpha for alpha in jumps
        if multiplier_nc(model, alpha) != MonomialIdeal.principal(v_generator(model, next_jump(model, alpha)))
    ]
    results.append(CheckResult("multiplier_equals_v_above", not mismatched, f"fails at {mismatched}" if mismatched else ""))

    unshifted = [
        alpha for alpha in jumps
        if v_generator(model, alpha + 1) != tuple(x + m for x, m in zip(v_generator(model, alpha), model.m))
    ]
    results.append(CheckResult("v_shift_by_f", not unshifted, f"fails at {unshifted}" if unshifted else ""))

    lcm = model.lcm
    grid = [Fraction(k, 4 * lcm) for k in range(int(4 * lcm * NC_CHECK_BOUND) + 1)]
    generators = [v_generator(model, alpha) for alpha in grid]
    not_monotone = [
        beta for beta, lower, upper in zip(grid[1:], generators, generators[1:])
        if any(x > y for x, y in zip(lower, upper))
    ]
    results.append(CheckResult("v_generator_monotone", not not_monotone,
        f"drops at {not_monotone}" if not_monotone else ""))

    not_constant = []
    for j in range(1, int(lcm * NC_CHECK_BOUND) + 1):
        top = v_generator(model, Fraction(j, lcm))
        inside = (Fraction(4 * (j - 1) + t, 4 * lcm) for t in (1, 2, 3))
        if any(v_generator(model, alpha) != top for alpha in inside):
            not_constant.append(Fraction(j, lcm))
    results.append(CheckResult("v_constant_on_lcm_intervals", not not_constant,
        f"varies below {not_constant}" if not_constant else f"lcm {lcm}"))

    unsupported = []
    for nu in itertools.product(*(range(min(mi, 3) + 1) for mi in model.m)):
        alpha = monomial_v_order(model, nu)
        attaining = {i + 1 for i, mi in enumerate(model.m) if mi > 0 and Fraction(nu[i] + 1, mi) == alpha}
        if not attaining & d_alpha_nc(model, _frac_part(alpha)):
            unsupported.append(nu)
    results.append(CheckResult("minimum_attained_on_d_alpha", not unsupported,
        f"no minimising component in D(alpha) for {unsupported}" if unsupported else ""))

    steps = [Fraction(0)] + jumps
    not_decreasing = [
        beta for alpha, beta in zip(steps, steps[1:])
        if not multiplier_nc(model, beta) < multiplier_nc(model, alpha)
    ]
    results.append(CheckResult("multiplier_strictly_decreases", not not_decreasing,
        f"no drop at {not_decreasing}" if not_decreasing else ""))

    jumps_between = [
        alpha for alpha, beta in zip(steps, steps[1:])
        if multiplier_nc(model, (alpha + beta) / 2) != multiplier_nc(model, alpha)
    ]
    results.append(CheckResult("multiplier_constant_between_jumps", not jumps_between,
        f"changes after {jumps_between}" if jumps_between else ""))

    unit_interval = [alpha for alpha in jumps if alpha <= 1]
    empty = [alpha for alpha in unit_interval if not d_alpha_nc(model, alpha)]
    results.append(CheckResult("d_alpha_nonempty_at_jumps", not empty, f"empty at {empty}" if empty else ""))

    support = sorted(model.support)
    queries = 0
    inexact = []
    for alpha in unit_interval:
        mu = tuple(_frac_part(-m * alpha) for m in model.m)
        for size in range(len(support) + 1):
            for subset in itertools.combinations(support, size):
                for j_size in range(len(support) + 1):
                    for j_set in itertools.combinations(support, j_size):
                        query = PsiPieceQuery.make(alpha, mu, subset, j_set, set(support) - set(j_set))
                        queries += 1
                        try:
                            full, shriek, star = psi_localized_dims(model, query)
                        except InexactPsiPieces:
                            inexact.append(query)
                            continue
                        if shriek + star != full:
                            inexact.append(query)
    results.append(CheckResult("psi_localization_exact", not inexact,
        f"{len(inexact)} of {queries} queries inexact" if inexact else f"{queries} queries"))

    violators = elsv_check(unit_interval, nc_bfunction_roots(model.m))
    results.append(CheckResult("jumps_are_bfunction_roots", not violators, f"not roots: {violators}" if violators else ""))
    return results

def quasi_homogeneous_type(res: ResolutionData) -> Optional[Tuple[int, int]]:
    """(a, b) with x^a + y^b topologically equivalent to the germ, found by
    comparing weighted dual graphs, or None."""
    if not res.exceptional or not res.is_reduced:
        return None
    mu = milnor_number(res)
    for a in range(2, math.isqrt(mu) + 2):
        if mu % (a - 1):
            continue
        b = mu // (a - 1) + 1
        if math.gcd(a, b) == res.branches and same_resolution(res, from_newton([(a, 0), (0, b)])):
            return (a, b)
    return None

def germ_checks(res: ResolutionData, roots: Optional[RootSet] = None) -> List[CheckResult]:
    """Identities every validated germ satisfies. The jumping numbers are
    checked against roots when given, or else against the b-function of a
    matching x^a + y^b."""
    results = []
    violations = validate(res)
    results.append(CheckResult("resolution_valid", not violations, "; ".join(str(v) for v in violations)))
    if violations:
        return results

    punctual = punctual_jumping_numbers(res)
    punctual_values = [alpha for alpha, _ in punctual]
    candidates = jumping_candidates(res, Fraction(0), Fraction(1))
    if res.exceptional:
        threshold = lct(res)
        smallest = min(punctual_values) if punctual_values else None
        results.append(CheckResult("lct_is_first_jump", threshold == smallest, f"lct {threshold}, first jump {smallest}"))
    results.append(CheckResult("jumps_are_candidates", set(punctual_values) <= set(candidates)))
    results.append(CheckResult("denominators_divide_lcm", denominators_divide_lcm(res, punctual_values), f"lcm {res.lcm}"))

    if roots is None:
        exponents = quasi_homogeneous_type(res)
        if exponents is not None:
            logger.debug("germ has the resolution graph of x^%d + y^%d", *exponents)
            roots = qh_bfunction_roots(*exponents)
    if roots is not None:
        violators = elsv_check(punctual_values, roots)
        results.append(CheckResult("jumps_are_bfunction_roots", not violators,
            f"not roots: {violators}" if violators else ""))

    nonvanishing = []
    for alpha in candidates:
        _, h1 = h0_h1(k_sheaf(res, alpha))
        if h1:
            nonvanishing.append(alpha)
    results.append(CheckResult("h1_vanishes", not nonvanishing, f"h1 != 0 at {nonvanishing}" if nonvanishing else ""))

    sp = spectrum(res)
    results.append(CheckResult("spectrum_support", sp.within(Fraction(0), Fraction(2)), repr(sp)))
    results.append(CheckResult("spectrum_symmetric", sp.is_symmetric(2), repr(sp)))

    if res.is_reduced:
        mu = milnor_number(res)
        results.append(CheckResult("spectrum_total_is_mu", sp.total() == mu, f"total {sp.total()}, mu {mu}"))
        quotient = omega_quotient_dims(res)
        results.append(CheckResult("delta_sandwich", quotient.sandwich_holds, f"{quotient.sandwich}"))

    failures = exhaustive_support_check(res)
    results.append(CheckResult("no_contributions_off_candidates", not failures, f"{failures}" if failures else ""))
    return results

def qh_checks(a: int, b: int, res: ResolutionData) -> List[CheckResult]:
    results = []
    expected = qh_spectrum(a, b)
    found = spectrum(res)
    results.append(CheckResult("spectrum_matches_closed_form", found == expected, f"{found} vs {expected}"))
    if math.gcd(a, b) == 1:
        proximity = from_proximity_document(quasi_homogeneous_proximity(a, b))
        results.append(CheckResult("toric_and_blowup_resolutions_agree", same_resolution(res, proximity)))
        invariants = cross_check_milnor_delta(a, b, proximity)
        results.append(CheckResult("milnor_delta_consistent", found.total() == invariants.mu, f"{invariants}"))
    return results

def run_checks(document: Mapping[str, Any]) -> List[CheckResult]:
    kind = documents.variant(document)
    if kind == "nc":
        results = nc_checks(documents.nc_model(document))
    else:
        res = documents.germ(document)
        exponents = documents.qh_exponents(document)
        if exponents is None:
            results = germ_checks(res)
        else:
            results = germ_checks(res, qh_bfunction_roots(*exponents)) + qh_checks(*exponents, res)
    for result in results:
        if result.passed:
            logger.debug("check %s passed %s", result.name, result.detail)
        else:
            logger.warning("check %s failed: %s", result.name, result.detail)
    return results
