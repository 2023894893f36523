"""
Invariant batteries run by the command line harness.

A battery receives the :class:`Context` of one trial and its random
generator and returns the list of :class:`~abelfourier.checks.Check`
evaluated in that trial. Checks on groups are labelled with the group
(``plancherel[Z4xZ2]``), so the report aggregates them per group.
"""

import time
import logging

import numpy as np

from abelfourier import characters, groups, interpolation, measures, norms, operators, spectral
from abelfourier.checks import Check
from abelfourier.functions import GroupFunction, DualFunction
from abelfourier.norms import Exponent, ONE, TWO, INFINITY, conjugate_exponent, group_norm, dual_pnorm
from abelfourier.utils import digest


logger = logging.getLogger(__name__)

# dual count and character identification are exhaustive up to this order
SMALL_GROUP = 64
# strip lines of the analytic families go up to this height
THORIN_HEIGHT = 8.0
# random exponential sums per three lines trial
EXPSUMS_PER_TRIAL = 5
# random measures per measures trial
MEASURES_PER_TRIAL = 3
# distance between the frequency pairs of the continuity check
CONTINUITY_STEP = 1e-2
# trial 0 compares and times the fast and naive transforms up to this order
BENCHMARK_ORDER = 4096


class Context:
    """
    Values shared by the checks of one trial.

    Args:
        settings (dict): plain configuration values
        trial (int): trial index
        fixture (:class:`~abelfourier.load.Fixture`): optional fixture

    """

    def __init__(self, settings, trial, fixture=None):
        self.settings = settings
        self.trial = trial
        self.fixture = fixture
        self.groups = [groups.GroupSpec(orders) for orders in settings['groups']]
        self.single = settings['tolerances']['single']
        self.aggregate = settings['tolerances']['aggregate']
        self.interp = settings['tolerances']['interpolation']
        self.t_grid = list(settings['t_grid'])
        self.p_grid = [Exponent(recip) for recip in settings['p_grid']]
        self.naive_max = settings['naive_max']
        self.interpolation = settings['interpolation']
        self.measures = settings['measures']

    @property
    def first(self):
        """One off checks (exhaustive, fixed examples) run in trial 0"""
        return self.trial == 0

    def fixture_kind(self, kind):
        if self.fixture is not None and self.fixture.kind == kind:
            return self.fixture
        return None


class Records(list):
    """List of checks that labels and tags what is added to it"""

    def add(self, checks, label=None, witness=None):
        if isinstance(checks, Check):
            checks = [checks]
        for check in checks:
            if label is not None:
                check.name = '{}[{}]'.format(check.name, label)
            if witness is not None:
                check.witness = witness
            self.append(check)
        return self


def _random_element(g, rng, kind=groups.GroupElement):
    return groups.element_at(g, int(rng.integers(g.n)), kind=kind)


def _max_abs(values):
    return float(np.max(np.abs(values), initial=0.0))


def _orthonormality(g, tol):
    table = characters.character_matrix(g)
    gram = table @ table.conj().T / g.n - np.eye(g.n)
    diagonal = _max_abs(np.diag(gram))
    np.fill_diagonal(gram, 0)
    checks = [
        Check('orthogonality', _max_abs(gram), 0.0, relation='==', atol=tol),
        Check('normalization', diagonal, 0.0, relation='==', atol=tol)
    ]
    if g.n <= SMALL_GROUP:
        distinct = np.unique(np.round(np.hstack([table.real, table.imag]), 8), axis=0).shape[0]
        checks.append(Check('dual-count', distinct, g.n, relation='=='))
    return checks


def _sampled_orthonormality(g, rng, tol, pairs=16):
    worst_off, worst_diag = 0.0, 0.0
    for _ in range(pairs):
        a = _random_element(g, rng, characters.DualElement)
        b = _random_element(g, rng, characters.DualElement)
        chi_a = characters.character_table(g, a)
        value = spectral.inner_product(chi_a, characters.character_table(g, b))
        if a == b:
            worst_diag = max(worst_diag, abs(value - 1))
        else:
            worst_off = max(worst_off, abs(value))
        worst_diag = max(worst_diag, abs(spectral.inner_product(chi_a, chi_a) - 1))
    return [
        Check('orthogonality', worst_off, 0.0, relation='==', atol=tol),
        Check('normalization', worst_diag, 0.0, relation='==', atol=tol)
    ]


def characters_battery(ctx, rng):
    out = Records()
    for g in ctx.groups:
        label = str(g)
        if g.n <= ctx.naive_max:
            if ctx.first:
                out.add(_orthonormality(g, ctx.aggregate), label, digest(g.orders))
        else:
            out.add(_sampled_orthonormality(g, rng, ctx.aggregate), label, digest(g.orders, ctx.trial))

        a = _random_element(g, rng, characters.DualElement)
        b = _random_element(g, rng, characters.DualElement)
        x = _random_element(g, rng)
        y = _random_element(g, rng)
        witness = digest(g.orders, a.residues, b.residues, x.residues, y.residues)
        chi_a = characters.character_table(g, a)
        chi_b = characters.character_table(g, b)

        value = characters.character_value(g, a, groups.add(g, x, y))
        expected = characters.character_value(g, a, x) * characters.character_value(g, a, y)
        product = characters.character_table(g, characters.character_product(g, a, b))
        inverse = characters.character_table(g, characters.character_inverse(g, a))
        # T_x chi_b = conj(chi_b(x)) chi_b
        shifted = characters.translate(chi_b, x)
        eigenvalue = np.conj(characters.character_value(g, b, x))
        total = characters.character_sum(g, a)
        out.add([
            Check('multiplicative', value, expected, relation='==', atol=ctx.single),
            Check('character-product', _max_abs((product - chi_a * chi_b).values), 0.0, relation='==', atol=ctx.single),
            Check('character-inverse', _max_abs((inverse - chi_a.conj()).values), 0.0, relation='==', atol=ctx.single),
            Check('translation-eigenvector', _max_abs((shifted - chi_b * eigenvalue).values), 0.0,
                  relation='==', atol=ctx.single),
            Check('character-sum', total, 0 if any(a.residues) else g.n, relation='==',
                  atol=ctx.aggregate * g.n)
        ], label, witness)

        f1 = GroupFunction.random(g, rng)
        f2 = GroupFunction.random(g, rng)
        scale = group_norm(f1, TWO) * group_norm(f2, TWO)
        twice = characters.translate(characters.translate(f1, x), y)
        once = characters.translate(f1, groups.add(g, x, y))
        out.add([
            Check('translation-unitary',
                  spectral.inner_product(characters.translate(f1, x), characters.translate(f2, x)),
                  spectral.inner_product(f1, f2), relation='==', atol=ctx.aggregate * scale),
            Check('translation-composition', _max_abs((twice - once).values), 0.0, relation='==', atol=ctx.single)
        ], label, digest(f1.values, f2.values, x.residues, y.residues))

        if g.n <= SMALL_GROUP:
            found = characters.is_character(g, chi_a, ctx.aggregate)
            out.add(Check('is-character', float(found), 1.0, relation='=='), label, witness)
        if g.n <= ctx.naive_max:
            c = complex(rng.standard_normal(), rng.standard_normal())
            found = characters.eigencharacter(chi_a * c)
            out.add(Check('eigencharacter', float(found == a), 1.0, relation='=='), label, witness)
    return out


def _benchmark(f):
    """Speed ratio of the naive transform over the fast one on ``f``"""
    start = time.perf_counter()
    spectral.fourier_fast(f)
    fast = time.perf_counter() - start
    start = time.perf_counter()
    spectral.fourier_naive(f)
    naive = time.perf_counter() - start
    ratio = naive / max(fast, 1e-9)
    logger.info('Fourier transform on %s: fast path %.1fx faster than the naive one', f.owner, ratio)
    return ratio


def _fourier_checks(f, ctx, use_naive):
    g = f.owner
    transform = spectral.fourier_fast(f)
    norm = group_norm(f, TWO)
    checks = [Check('plancherel', dual_pnorm(transform, TWO), norm, relation='==', rtol=ctx.aggregate)]
    if use_naive:
        naive = spectral.fourier_naive(f)
        checks.append(Check('fast-naive', dual_pnorm(transform - naive, TWO), 0.0, relation='==',
                            atol=ctx.aggregate * dual_pnorm(naive, TWO)))
        back = spectral.inverse_fourier(naive, method='naive')
    else:
        back = spectral.inverse_fourier(transform)
    checks.append(Check('inversion', group_norm(back - f, TWO), 0.0, relation='==', atol=ctx.aggregate * norm))
    return transform, checks


def fourier_battery(ctx, rng):
    out = Records()
    for g in ctx.groups:
        label = str(g)
        use_naive = g.n <= ctx.naive_max
        benchmark = ctx.first and g.n <= max(ctx.naive_max, BENCHMARK_ORDER)
        if ctx.first and not use_naive:
            if benchmark:
                logger.warning('Naive transform on %s (n=%d above naive_max) in trial 0 only', g, g.n)
            else:
                logger.warning('Naive transform skipped on %s (n=%d above naive_max)', g, g.n)

        f1 = GroupFunction.random(g, rng)
        f2 = GroupFunction.random(g, rng)
        h = DualFunction.random(g, rng)
        if benchmark:
            _benchmark(f1)

        transform1, checks = _fourier_checks(f1, ctx, use_naive or benchmark)
        out.add(checks, label, digest(f1.values))

        transform2 = spectral.fourier_fast(f2)
        scale = group_norm(f1, TWO) * group_norm(f2, TWO)
        out.add(Check('polarized-plancherel', spectral.dual_inner_product(transform1, transform2),
                      spectral.inner_product(f1, f2), relation='==', atol=ctx.aggregate * scale),
                label, digest(f1.values, f2.values))

        back = spectral.fourier_fast(spectral.inverse_fourier(h))
        out.add(Check('surjectivity', dual_pnorm(back - h, TWO), 0.0, relation='==',
                      atol=ctx.aggregate * dual_pnorm(h, TWO)), label, digest(h.values))

        # F(chi_a) is the indicator of a, F(T_x f)(a) = conj(chi_a(x)) F(f)(a)
        a = _random_element(g, rng, characters.DualElement)
        x = _random_element(g, rng)
        indicator = np.zeros(g.n, dtype=np.complex128)
        indicator[groups.index_of(g, a)] = 1
        character_transform = spectral.fourier_fast(characters.character_table(g, a)).values
        phases = characters.character_table(g, characters.dual_element(g, x.residues)).values
        shifted = spectral.fourier_fast(characters.translate(f1, x)).values
        out.add([
            Check('character-transform', _max_abs(character_transform - indicator), 0.0, relation='==',
                  atol=ctx.aggregate),
            Check('translation-modulation', _max_abs(shifted - np.conj(phases) * transform1.values), 0.0,
                  relation='==', atol=ctx.aggregate * group_norm(f1, ONE))
        ], label, digest(f1.values, a.residues, x.residues))

        fixture = ctx.fixture_kind('function')
        if ctx.first and fixture is not None and fixture.function_on(g) is not None:
            f = fixture.function_on(g)
            out.add(_fourier_checks(f, ctx, use_naive)[1], 'fixture:' + label, digest(f.values))
    return out


def convolution_battery(ctx, rng):
    out = Records()
    for g in ctx.groups:
        label = str(g)
        f1 = GroupFunction.random(g, rng)
        f2 = GroupFunction.random(g, rng)
        witness = digest(f1.values, f2.values)
        scale = group_norm(f1, TWO) * group_norm(f2, TWO)
        forward = spectral.convolve(f1, f2)
        backward = spectral.convolve(f2, f1)
        product = spectral.fourier_fast(f1).values * spectral.fourier_fast(f2).values
        identity = spectral.convolve(GroupFunction.delta0(g), f1)
        out.add([
            Check('convolution-theorem', _max_abs(spectral.fourier_fast(forward).values - product), 0.0,
                  relation='==', atol=ctx.aggregate * scale),
            Check('commutativity', _max_abs((forward - backward).values), 0.0, relation='==',
                  atol=ctx.aggregate * scale),
            Check('convolution-identity', _max_abs((identity - f1).values), 0.0, relation='==',
                  atol=ctx.aggregate * group_norm(f1, INFINITY))
        ], label, witness)

        # chi_a * chi_b = [a = b] chi_b
        a = _random_element(g, rng, characters.DualElement)
        b = a if rng.random() < 0.5 else _random_element(g, rng, characters.DualElement)
        chi_b = characters.character_table(g, b)
        expected = chi_b if a == b else GroupFunction.zeros(g)
        result = spectral.convolve(characters.character_table(g, a), chi_b)
        out.add(Check('character-convolution', _max_abs((result - expected).values), 0.0, relation='==',
                      atol=ctx.aggregate), label, digest(a.residues, b.residues))

        if g.n <= SMALL_GROUP:
            f3 = GroupFunction.random(g, rng)
            left = spectral.convolve(forward, f3)
            right = spectral.convolve(f1, spectral.convolve(f2, f3))
            out.add(Check('associativity', _max_abs((left - right).values), 0.0, relation='==',
                          atol=ctx.aggregate * scale * group_norm(f3, TWO)),
                    label, digest(f1.values, f2.values, f3.values))
    return out


def norms_battery(ctx, rng):
    out = Records()
    size = int(rng.integers(1, 9))
    v = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    w = rng.standard_normal(size) + 1j * rng.standard_normal(size)
    tuple_witness = digest(v, w)
    pairs = [(p, q) for p in ctx.p_grid for q in ctx.p_grid if p.recip >= q.recip]

    for p in ctx.p_grid:
        witness = norms.holder_witness(v, p)
        out.add([
            norms.holder_check(v, w, p, rtol=ctx.single),
            Check('holder-witness-pairing', complex(np.sum(v * witness)), norms.vec_norm(v, p), relation='==',
                  rtol=ctx.single),
            Check('holder-witness-norm', norms.vec_norm(witness, conjugate_exponent(p)), 1.0, relation='==',
                  rtol=ctx.single),
            Check('minkowski', norms.vec_norm(v + w, p), norms.vec_norm(v, p) + norms.vec_norm(w, p), rtol=ctx.single)
        ], 'tuple', tuple_witness)
    for p, q in pairs:
        out.add(norms.norm_comparison_report(v, p, q, rtol=ctx.single), 'tuple', tuple_witness)

    for g in ctx.groups:
        f1, f2 = GroupFunction.random(g, rng), GroupFunction.random(g, rng)
        h1, h2 = DualFunction.random(g, rng), DualFunction.random(g, rng)
        group_witness = digest(f1.values, f2.values)
        dual_witness = digest(h1.values, h2.values)
        for p in ctx.p_grid:
            out.add(norms.group_holder_check(f1, f2, p, rtol=ctx.aggregate), 'A:' + str(g), group_witness)
            out.add(norms.dual_holder_check(h1, h2, p, rtol=ctx.aggregate), 'A*:' + str(g), dual_witness)
        for p, q in pairs:
            out.add(norms.norm_comparison_report(f1, p, q, rtol=ctx.aggregate), 'A:' + str(g), group_witness)
            out.add(norms.norm_comparison_report(h1, p, q, rtol=ctx.aggregate), 'A*:' + str(g), dual_witness)
    return out


def young_battery(ctx, rng):
    out = Records()
    for g in ctx.groups:
        label = str(g)
        f1, f2 = GroupFunction.random(g, rng), GroupFunction.random(g, rng)
        witness = digest(f1.values, f2.values)
        product = spectral.convolve(f1, f2)
        for p in ctx.p_grid:
            for r in ctx.p_grid:
                if p.recip + r.recip >= 1:
                    out.add(norms.young_check(f1, f2, p, r, rtol=ctx.aggregate, product=product), label, witness)
            out.add(norms.convolution_sup_check(f1, f2, p, rtol=ctx.aggregate, product=product), label, witness)

        # equality at p = r = 1 for non negative functions
        u = GroupFunction(g, np.abs(f1.values))
        z = GroupFunction(g, np.abs(f2.values))
        out.add(Check('young-equality', group_norm(spectral.convolve(u, z), ONE),
                      group_norm(u, ONE) * group_norm(z, ONE), relation='==', rtol=ctx.aggregate), label, witness)
    return out


def hausdorff_young_battery(ctx, rng):
    out = Records()
    exponents = sorted({p for p in ctx.p_grid if p.recip >= 0.5} | {ONE, TWO}, key=lambda p: -p.recip)
    for g in ctx.groups:
        label = str(g)
        dense = GroupFunction.random(g, rng)
        # sparse inputs sit closer to the p = 1 extremals
        sparse = GroupFunction(g, np.where(rng.random(g.n) < 0.2, dense.values, 0))
        for f in (dense, sparse):
            transform = spectral.fourier_fast(f)
            witness = digest(f.values)
            for p in exponents:
                out.add(norms.hausdorff_young_check(f, p, rtol=ctx.aggregate, transform=transform), label, witness)

        delta = GroupFunction.delta0(g)
        out.add(Check('hausdorff-young-delta', dual_pnorm(spectral.fourier_fast(delta), INFINITY),
                      group_norm(delta, ONE), relation='==', rtol=ctx.aggregate), label, digest(g.orders))
    return out


def _exact_lower_pairs():
    return [(ONE, TWO), (ONE, INFINITY), (ONE, Exponent(0.25)), (TWO, INFINITY), (Exponent(0.75), INFINITY)]


def riesz_thorin_battery(ctx, rng):
    out = Records()
    settings = ctx.interpolation
    trials, steps = settings['lower_trials'], settings['ascent_steps']
    m = settings['dimension']

    def verify(T, t_grid, seed):
        return interpolation.riesz_thorin_verify(T, ONE, INFINITY, TWO, TWO, t_grid, trials, seed,
                                                 rtol=ctx.interp, steps=steps)

    T = interpolation.LinearMap.random(m, rng)
    out.add(verify(T, ctx.t_grid, int(rng.integers(2**31))), 'random', digest(T.entries))

    fixture = ctx.fixture_kind('matrix')
    if ctx.first and fixture is not None:
        out.add(verify(fixture.value, ctx.t_grid, 0), 'fixture', digest(fixture.value.entries))

    if ctx.first:
        hadamard = interpolation.hadamard_map(2)
        report = verify(hadamard, sorted({0.0, 1.0} | set(ctx.t_grid)), 0)
        out.add(report, 'hadamard', digest(hadamard.entries))
        for row in report.details['rows']:
            # L_0 = 1 and L_1 = sqrt(2)
            out.add(Check('hadamard-bound', row['bound'], 2 ** (row['t'] / 2), relation='==', rtol=ctx.aggregate),
                    'hadamard')
            if row['t'] in (0.0, 1.0):
                out.add(Check('hadamard-endpoint', row['lower'], row['bound'], relation='==', atol=1e-3), 'hadamard')

    # the lower bound is exact where the norm is attained at a coordinate or a row witness
    small = interpolation.LinearMap.random(min(m, 3), rng)
    seed = int(rng.integers(2**31))
    for p, q in _exact_lower_pairs() + [(TWO, TWO)]:
        exact = interpolation.op_norm_exact(small, p, q, seed=seed)
        lower = interpolation.op_norm_lower(small, p, q, trials, seed, steps=steps)
        out.add(Check('lower-below-exact', lower, exact, rtol=ctx.interp), 'small', digest(small.entries))
        if (p, q) != (TWO, TWO):
            out.add(Check('lower-attains-exact', lower, exact, relation='==', rtol=ctx.interp),
                    'small', digest(small.entries))

    # analytic families keep the p_x norm on the whole strip
    xs = np.linspace(0, 1, settings['thorin_x'])
    ys = np.linspace(-THORIN_HEIGHT, THORIN_HEIGHT, settings['thorin_y'])
    endpoints = [(ONE, TWO)]
    choice = rng.integers(len(ctx.p_grid), size=2)
    endpoints.append((ctx.p_grid[choice[0]], ctx.p_grid[choice[1]]))
    for p0, p1 in endpoints:
        t = 0.5 if (p0, p1) == (ONE, TWO) else float(rng.uniform(0.05, 0.95))
        v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
        v[rng.random(m) < 0.2] = 0
        if not np.any(v):
            v[0] = 1
        v = v / norms.vec_norm(v, interpolation.intermediate_exponent(p0, p1, t))
        deviation = 0.0
        for x in xs:
            px = interpolation.intermediate_exponent(p0, p1, x)
            for y in ys:
                alpha = interpolation.thorin_family(v, p0, p1, t, complex(x, y))
                deviation = max(deviation, abs(norms.vec_norm(alpha, px) - 1))
        center = interpolation.thorin_family(v, p0, p1, t, t)
        out.add([
            Check('thorin-family-norm', deviation, 0.0, relation='==', atol=ctx.aggregate),
            Check('thorin-family-center', _max_abs(center - v), 0.0, relation='==', atol=ctx.single)
        ], 'family', digest(v, p0.recip, p1.recip, t))

    v = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    w = rng.standard_normal(m) + 1j * rng.standard_normal(m)
    out.add(interpolation.thorin_pipeline_check(T, v, w, ONE, INFINITY, TWO, TWO, 0.5,
                                                samples=settings['samples'] + 1, rtol=ctx.interp),
            'random', digest(T.entries, v, w))
    return out


def three_lines_battery(ctx, rng):
    out = Records()
    settings = ctx.interpolation
    samples = settings['samples']
    interior = [t for t in ctx.t_grid if 0 < t < 1]
    if len(interior) == 0:
        return out

    def equalities(report):
        return [Check('three-lines-equality', row['M'], row['bound'], relation='==', rtol=ctx.aggregate)
                for row in report.details['rows']]

    if ctx.first:
        for a in (-2, -1, 1, 2):
            f = interpolation.ExpSum([(1.0, a)])
            out.add(equalities(interpolation.three_lines_check(f, interior, samples, rtol=ctx.aggregate)),
                    'exponential', digest(a))
        constant = interpolation.ExpSum([(complex(1.5, -0.5), 0)])
        out.add(equalities(interpolation.three_lines_check(constant, interior, samples, rtol=ctx.aggregate)),
                'constant')
        # |1 + e^(x+iy)| peaks at y = 0
        f = interpolation.ExpSum([(1.0, 0), (1.0, 1)])
        out.add(Check('strip-max', interpolation.strip_max(f, 0.5, samples), 1 + np.exp(0.5), relation='==',
                      rtol=ctx.aggregate), 'constant')

    for _ in range(EXPSUMS_PER_TRIAL):
        f = interpolation.ExpSum.random(rng, settings['expsum_terms'])
        out.add(interpolation.three_lines_check(f, interior, samples, rtol=ctx.interp), 'random',
                digest(f.coefficients, f.multiples))
    return out


def conv_op_battery(ctx, rng):
    out = Records()
    for g in ctx.groups:
        label = str(g)
        kernels = [GroupFunction.random(g, rng)]
        fixture = ctx.fixture_kind('function')
        if ctx.first and fixture is not None and fixture.function_on(g) is not None:
            kernels.append(fixture.function_on(g))
        for b in kernels:
            k = operators.ConvKernel(b)
            f1, f2 = GroupFunction.random(g, rng), GroupFunction.random(g, rng)
            witness = digest(b.values, f1.values, f2.values)
            _, ratio1 = operators.sharpness_witness(k, ONE)
            _, ratio2 = operators.sharpness_witness(k, TWO)
            out.add([
                Check('sharpness-1', ratio1, k.norm1, relation='==', rtol=ctx.aggregate),
                Check('sharpness-2', ratio2, k.spectral_sup, relation='==', rtol=ctx.aggregate),
                Check('bound-endpoint-1', operators.bound_p(k, ONE), k.norm1, relation='==', rtol=ctx.single),
                Check('bound-endpoint-2', operators.bound_p(k, TWO), k.spectral_sup, relation='==', rtol=ctx.single),
                Check('bound-reflection', operators.bound_p(operators.reflect(k), TWO), k.spectral_sup,
                      relation='==', rtol=ctx.aggregate)
            ], label, witness)

            image = operators.conv_apply(k, f1)
            for p in ctx.p_grid:
                out.add(operators.operator_bound_check(k, f1, p, rtol=ctx.aggregate, image=image), label, witness)
            out.add(operators.diagonalization_check(k, f1, rtol=ctx.aggregate), label, witness)
            out.add(operators.duality_pairing_check(k, f1, f2, rtol=ctx.aggregate), label, witness)
            p = ctx.p_grid[int(rng.integers(len(ctx.p_grid)))]
            out.add(operators.reflection_norm_check(k, f1, p, rtol=ctx.aggregate), label, witness)
    return out


def _measure_checks(lam, rng, ctx):
    settings = ctx.measures
    dim = lam.dim
    samples = rng.uniform(-2, 2, size=(settings['samples'], dim))
    xi = rng.uniform(-2, 2, size=dim)
    complex_xi = xi + 1j * rng.uniform(-0.5, 0.5, size=dim)
    xis = rng.uniform(-5, 5, size=(settings['frequencies'], dim))
    steps = rng.standard_normal(size=xis.shape)
    etas = xis + CONTINUITY_STEP * steps / np.linalg.norm(steps, axis=1, keepdims=True)
    phi = measures.bump(rng.uniform(-1, 1, size=dim), rng.uniform(0.5, 2.0))
    pieces = [measures.bump(rng.uniform(-1, 1, size=dim), rng.uniform(0.5, 2.0)) for _ in range(3)]

    checks = [
        measures.eigen_identity_check(lam, xi, samples, rtol=ctx.single),
        measures.fourier_bound_check(lam, xis, rtol=ctx.single),
        measures.fourier_continuity_check(lam, xis, etas, rtol=ctx.single),
        measures.complementary_partition_check(lam, phi, rtol=ctx.single),
        Check('fourier-at-zero', measures.measure_fourier(lam, np.zeros(dim)), complex(np.sum(lam.weights)),
              relation='==', atol=ctx.single * measures.dual_norm(lam))
    ]
    complex_check = measures.eigen_identity_check(lam, complex_xi, samples, rtol=ctx.single)
    complex_check.name = 'eigen-identity-complex'
    checks.append(complex_check)
    checks.extend(measures.partition_inequality_check(lam, pieces, rtol=ctx.single))
    checks.extend(measures.convolution_bound_check(lam, phi, samples, rtol=ctx.single))
    checks.extend(measures.convolution_bound_check(lam, measures.exponential(xi), samples, rtol=ctx.single))
    return checks


def _norming_field(lam):
    """Field of sup norm 1 with ``lambda(f) = ||lambda||_*``, bumps of disjoint supports at the atoms"""
    points = lam.points
    if len(points) > 1:
        distances = np.linalg.norm(points[:, None, :] - points[None, :, :], axis=-1)
        radius = float(np.min(distances[np.triu_indices(len(points), k=1)])) / 2
    else:
        radius = 1.0
    field = measures.constant(0)
    for w, x in zip(lam.weights, points):
        if w != 0:
            field = field + measures.bump(x, radius, np.conj(w) / abs(w))
    return field


def measures_battery(ctx, rng):
    out = Records()
    settings = ctx.measures
    for _ in range(MEASURES_PER_TRIAL):
        dim = int(rng.integers(1, settings['max_dim'] + 1))
        lam = measures.PointMassMeasure.random(rng, settings['max_atoms'], dim)
        mu = measures.PointMassMeasure.random(rng, settings['max_atoms'], dim)
        witness = digest(lam.weights, lam.points)
        out.add(_measure_checks(lam, rng, ctx), 'random', witness)

        a = complex(rng.standard_normal(), rng.standard_normal())
        f = measures.exponential(rng.uniform(-2, 2, size=dim))
        phi = measures.bump(rng.uniform(-1, 1, size=dim), rng.uniform(0.5, 2.0))
        size_lam, size_mu = measures.dual_norm(lam), measures.dual_norm(mu)
        out.add([
            Check('linearity', measures.eval_measure(a * lam + mu, f),
                  a * measures.eval_measure(lam, f) + measures.eval_measure(mu, f), relation='==',
                  atol=ctx.single * (abs(a) * size_lam + size_mu)),
            Check('weighted-evaluation', measures.eval_measure(measures.weight_measure(lam, phi), f),
                  measures.eval_measure(lam, phi * f), relation='==', atol=ctx.single * size_lam),
            Check('dual-norm-triangle', measures.dual_norm(lam + mu), size_lam + size_mu, rtol=ctx.single),
            Check('dual-norm-homogeneity', measures.dual_norm(a * lam), abs(a) * size_lam, relation='==',
                  rtol=ctx.single),
            Check('dual-norm-attained', measures.eval_measure(lam, _norming_field(lam)), size_lam, relation='==',
                  rtol=ctx.single)
        ], 'random', digest(lam.weights, lam.points, mu.weights, mu.points))

    fixture = ctx.fixture_kind('measure')
    if ctx.first and fixture is not None:
        out.add(_measure_checks(fixture.value, rng, ctx), 'fixture', digest(fixture.value.weights, fixture.value.points))
    return out


SUITES = {
    'characters': characters_battery,
    'fourier': fourier_battery,
    'convolution': convolution_battery,
    'norms': norms_battery,
    'young': young_battery,
    'hausdorff-young': hausdorff_young_battery,
    'riesz-thorin': riesz_thorin_battery,
    'three-lines': three_lines_battery,
    'conv-op': conv_op_battery,
    'measures': measures_battery
}

ALL = 'all'


def suite_id(name):
    """Stable integer of a suite, part of the seed of its trials"""
    return list(SUITES).index(name)
