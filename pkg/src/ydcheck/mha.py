"""Regular multiplier Hopf algebras.

The comultiplication is never materialized as a multiplier on the tensor
square; an instance carries exactly the four computable slice maps

    delta_r(a, b)  = Delta(a)(1 (x) b)         a_(1) (x) a_(2)b
    delta_l(a, b)  = (a (x) 1)Delta(b)         a b_(1) (x) b_(2)
    delta_r2(a, b) = Delta(a)(b (x) 1)         a_(1)b (x) a_(2)
    delta_l2(a, b) = (1 (x) a)Delta(b)         b_(1) (x) a b_(2)

together with the counit and a bijective antipode.  Sweedler-style
expressions elsewhere in the library are always realized as compositions of
these slices with local units inserted; the composition used is documented
next to each formula.

Unital instances may additionally materialize the coproduct, in which case
the slices are derived from it.
"""

import random

from .linear import (Element, Ten, bilinear, tensor, legs, make_sym, flip,
                     apply_leg, apply_pair_legs, sym_str)


class Algebra:
    """A non-degenerate algebra with an enumerable-or-sampleable basis.

    mult_basis(sa, sb) gives the product of two basis vectors; basis is a
    list for finite instances and None for infinite ones, in which case
    sample_basis supplies random basis symbols.
    """

    def __init__(self, field, mult_basis, *, basis=None, sample_basis=None,
                 unit=None, local_unit=None, name="algebra"):
        self.field = field
        self.name = name
        self.basis = list(basis) if basis is not None else None
        self._mult = bilinear(field, mult_basis)
        self.unit = unit
        self.has_unit = unit is not None
        if sample_basis is not None:
            self._sample_basis = sample_basis
        elif self.basis is not None:
            self._sample_basis = lambda rng: rng.choice(self.basis)
        else:
            raise ValueError("infinite algebra needs a basis sampler")
        self._local_unit = local_unit

    def mult(self, x, y):
        return self._mult(x, y)

    def mult_tensor(self, x, y):
        """Legwise multiplication on a tensor power (arities must match)."""
        out = Element(self.field)
        for sx, cx in x.terms.items():
            lx = legs(sx)
            for sy, cy in y.terms.items():
                ly = legs(sy)
                if len(lx) != len(ly):
                    raise ValueError("tensor arity mismatch: %d vs %d" % (len(lx), len(ly)))
                acc = self.mult(self.el(lx[0]), self.el(ly[0]))
                for a, b in zip(lx[1:], ly[1:]):
                    acc = tensor(acc, self.mult(self.el(a), self.el(b)))
                out = out + acc.scaled(cx * cy)
        return out

    # the common arity-2 case keeps its short name
    mult2 = mult_tensor

    def el(self, sym, coeff=None):
        return Element.basis(self.field, sym, coeff)

    def zero(self):
        return Element(self.field)

    def sample_basis(self, rng):
        return self._sample_basis(rng)

    def local_unit(self, elems):
        """A two-sided local unit: e with e*x = x*e = x for the given elems."""
        if self._local_unit is not None:
            return self._local_unit(elems)
        if self.has_unit:
            return self.unit
        raise ValueError("no local unit rule for %s" % self.name)


class Multiplier:
    """A pair of compatible multiplication maps housing M(A) elements.

    left(x) is f*x and right(x) is x*f; either may be None for the one-sided
    spaces L(A) / R(A).
    """

    def __init__(self, left=None, right=None, label="multiplier"):
        self._left = left
        self._right = right
        self.label = label

    def left(self, x):
        if self._left is None:
            raise ValueError("%s has no left action (one-sided multiplier)" % self.label)
        return self._left(x)

    def right(self, x):
        if self._right is None:
            raise ValueError("%s has no right action (one-sided multiplier)" % self.label)
        return self._right(x)

    def compatible_on(self, algebra, xs, ys):
        """Check (x*f)*y == x*(f*y) on the given probe elements."""
        for x in xs:
            for y in ys:
                if algebra.mult(self.right(x), y) != algebra.mult(x, self.left(y)):
                    return False
        return True

    @classmethod
    def from_element(cls, algebra, f):
        return cls(left=lambda x: algebra.mult(f, x),
                   right=lambda x: algebra.mult(x, f),
                   label=repr(f))


class MultiplierHopfAlgebra:
    def __init__(self, algebra, *, delta_r, delta_l, delta_r2, delta_l2,
                 counit, antipode, antipode_inv, delta_cover=None,
                 coproduct=None, eps_one=None, commutative=False,
                 cocommutative=False, name="mha"):
        self.algebra = algebra
        self.field = algebra.field
        self.name = name
        # an element with counit 1, used as a seed for local units of
        # counit-twisted module actions on non-unital instances
        self.eps_one = eps_one if eps_one is not None else algebra.unit
        self.commutative = commutative
        self.cocommutative = cocommutative
        f = algebra.field
        self.delta_r = bilinear(f, delta_r)
        self.delta_l = bilinear(f, delta_l)
        self.delta_r2 = bilinear(f, delta_r2)
        self.delta_l2 = bilinear(f, delta_l2)
        self._counit = counit          # basis sym -> scalar
        self._antipode = antipode      # basis sym -> Element
        self._antipode_inv = antipode_inv
        self._delta_cover = delta_cover
        self._coproduct = coproduct    # basis sym -> arity-2 Element, unital only

    # -- basic linear maps -------------------------------------------------

    def el(self, sym, coeff=None):
        return self.algebra.el(sym, coeff)

    def counit(self, x):
        out = self.field.zero()
        for s, c in x.terms.items():
            out = out + c * self._counit(s)
        return out

    def antipode(self, x):
        return x.map_terms(self._antipode)

    def antipode_inv(self, x):
        return x.map_terms(self._antipode_inv)

    def coproduct(self, x):
        """Materialized Delta(x); only available on unital instances."""
        if self._coproduct is None:
            raise ValueError("%s does not materialize its coproduct" % self.name)
        return x.map_terms(self._coproduct)

    def sweedler(self, x, n):
        """Iterated materialized coproduct: list-of-legs form of Delta^(n-1)."""
        out = x
        for i in range(n - 1):
            out = apply_leg(out, i, self.coproduct)
        return out

    def delta_cover(self, xs, ys):
        """An element c with Delta(c)(x (x) y) = x (x) y for the given spans.

        Used to evaluate Delta(m)(x (x) y) for multipliers m: replace m by
        the algebra element mc.
        """
        if self._delta_cover is not None:
            return self._delta_cover(xs, ys)
        if self.algebra.has_unit:
            return self.algebra.unit
        raise ValueError("no coproduct cover rule for %s" % self.name)

    def local_unit(self, elems):
        return self.algebra.local_unit(elems)

    # -- the canonical bijections T1..T4 on A (x) A ------------------------

    def _pairwise(self, x2, f):
        out = Element(self.field)
        for s, c in x2.terms.items():
            a, b = legs(s)
            out = out + f(self.el(a), self.el(b)).scaled(c)
        return out

    def t1(self, x2):
        return self._pairwise(x2, self.delta_r)

    def t2(self, x2):
        return self._pairwise(x2, self.delta_l)

    def t3(self, x2):
        return self._pairwise(x2, self.delta_r2)

    def t4(self, x2):
        return self._pairwise(x2, self.delta_l2)

    def inv_t1(self, x2):
        # a_(1) (x) S(a_(2))b  ==  (i (x) S)((1 (x) S^-1(b))Delta(a))
        def f(a, b):
            w = self.delta_l2(self.antipode_inv(b), a)
            return apply_leg(w, 1, self.antipode)
        return self._pairwise(x2, f)

    def inv_t2(self, x2):
        # aS(b_(1)) (x) b_(2)  ==  (S (x) i)(Delta(b)(S^-1(a) (x) 1))
        def f(a, b):
            w = self.delta_r2(b, self.antipode_inv(a))
            return apply_leg(w, 0, self.antipode)
        return self._pairwise(x2, f)

    def inv_t3(self, x2):
        # y_(2) (x) S^-1(y_(1))x  ==  tau (S^-1 (x) i)((S(x) (x) 1)Delta(y));
        # recovery reduces through S^-1(y_(2))y_(1) = eps(y)1, which holds
        # even when S^2 != id
        def f(x, y):
            w = self.delta_l(self.antipode(x), y)
            return flip(apply_leg(w, 0, self.antipode_inv))
        return self._pairwise(x2, f)

    def inv_t4(self, x2):
        # yS^-1(x_(2)) (x) x_(1)  ==  tau (i (x) S^-1)(Delta(x)(1 (x) S(y)))
        def f(x, y):
            w = self.delta_r(x, self.antipode(y))
            return flip(apply_leg(w, 1, self.antipode_inv))
        return self._pairwise(x2, f)

    def tmap(self, k):
        return [self.t1, self.t2, self.t3, self.t4][k - 1]

    def inv_t(self, k):
        return [self.inv_t1, self.inv_t2, self.inv_t3, self.inv_t4][k - 1]

    # -- the twist operators -----------------------------------------------

    def _s_leg(self, x2, i):
        return apply_leg(x2, i, self.antipode)

    def _sinv_leg(self, x2, i):
        return apply_leg(x2, i, self.antipode_inv)

    def script_t(self, x2):
        # b_(2) (x) aS(b_(1))b_(3), via the factorization
        # T4 (S (x) i) T3 (i (x) S^-1) tau
        return self.t4(self._s_leg(self.t3(self._sinv_leg(flip(x2), 1)), 0))

    def script_t_inv(self, x2):
        # inverse of the factorization; equals bS^-1(a_(3))a_(1) (x) a_(2)
        return flip(self._s_leg(self.inv_t3(self._sinv_leg(self.inv_t4(x2), 0)), 1))

    def script_t_prime(self, x2):
        # b_(1) (x) S(b_(2))ab_(3), via (i (x) S) T4 tau (i (x) S^-1) T4
        return self._s_leg(self.t4(flip(self._sinv_leg(self.t4(x2), 1))), 1)

    def script_t_prime_inv(self, x2):
        # a_(3)bS^-1(a_(2)) (x) a_(1), by inverting the factorization
        return self.inv_t4(self._s_leg(flip(self.inv_t4(self._sinv_leg(x2, 1))), 1))

    def counit_leg(self, x, i):
        """(... (x) eps (x) ...): collapse leg i through the counit."""
        out = Element(self.field)
        for s, c in x.terms.items():
            ls = legs(s)
            coeff = c * self._counit(ls[i])
            if coeff != self.field.zero():
                rest = ls[:i] + ls[i + 1:]
                out = out + Element.basis(self.field, make_sym(rest), coeff)
        return out

    def mult_legs(self, x2):
        """m: A (x) A -> A on arity-2 elements."""
        out = Element(self.field)
        for s, c in x2.terms.items():
            a, b = legs(s)
            out = out + self.algebra.mult(self.el(a), self.el(b)).scaled(c)
        return out


# -- seeded sampling -------------------------------------------------------

def coeff_pool(field):
    """Spec'd coefficient pool: small integers, or all of F_p when small."""
    els = field.elements()
    if els is not None and len(els) <= 11:
        return [e for e in els if e != field.zero()]
    return [field.from_int(n) for n in (-2, -1, 1, 2)]


def random_element(rng, field, sample_sym, max_support=4):
    pool = coeff_pool(field)
    k = rng.randint(1, max_support)
    terms = {}
    for _ in range(k):
        terms[sample_sym(rng)] = rng.choice(pool)
    return Element(field, terms)


def random_alg_element(rng, mha, max_support=4):
    return random_element(rng, mha.field, mha.algebra.sample_basis, max_support)


def sample_pairs(rng, mha, n):
    for _ in range(n):
        yield random_alg_element(rng, mha), random_alg_element(rng, mha)


# -- axiom checkers --------------------------------------------------------

def check_mha_axioms(mha, samples=100, seed=0, suite="mha-axioms"):
    """Run every structural law of a regular multiplier Hopf algebra on
    seeded random elements (plus exhaustive basis coverage when finite)."""
    from .report import Report
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    rng = random.Random(seed)
    alg = mha.algebra

    def rand():
        return random_alg_element(rng, mha)

    # associativity and non-degeneracy of the product
    ok, wit = True, None
    for _ in range(samples):
        a, b, c = rand(), rand(), rand()
        if alg.mult(alg.mult(a, b), c) != alg.mult(a, alg.mult(b, c)):
            ok, wit = False, "a=%r b=%r c=%r" % (a, b, c)
            break
    rep.add("assoc", "(ab)c = a(bc)", ok, wit)

    probe = ([alg.el(s) for s in alg.basis] if alg.basis is not None
             else [rand() for _ in range(12)])
    ok, wit = True, None
    for a in probe:
        if a.is_zero():
            continue
        if all(alg.mult(a, b).is_zero() for b in probe + [a]):
            ok, wit = False, "a=%r has ab=0 for all probes" % a
            break
        if all(alg.mult(b, a).is_zero() for b in probe + [a]):
            ok, wit = False, "a=%r has ba=0 for all probes" % a
            break
    rep.add("nondegenerate", "product non-degenerate on probe set", ok, wit)

    # local units
    ok, wit = True, None
    for _ in range(8):
        xs = [rand() for _ in range(3)]
        e = alg.local_unit(xs)
        for x in xs:
            if alg.mult(e, x) != x or alg.mult(x, e) != x:
                ok, wit = False, "e=%r x=%r" % (e, x)
                break
        if not ok:
            break
    rep.add("local-unit", "e x = x e = x for local units", ok, wit)

    # sliced coassociativity:
    # (a (x) 1 (x) 1)(Delta (x) i)(Delta(b)(1 (x) c))
    #   = (i (x) Delta)((a (x) 1)Delta(b))(1 (x) 1 (x) c)
    ok, wit = True, None
    for _ in range(samples):
        a, b, c = rand(), rand(), rand()
        lhs = Element(mha.field)
        for s, co in mha.delta_r(b, c).terms.items():
            p, q = legs(s)
            lhs = lhs + tensor(mha.delta_l(a, mha.el(p)), mha.el(q)).scaled(co)
        rhs = Element(mha.field)
        for s, co in mha.delta_l(a, b).terms.items():
            r, t = legs(s)
            rhs = rhs + tensor(mha.el(r), mha.delta_r(mha.el(t), c)).scaled(co)
        if lhs != rhs:
            ok, wit = False, "a=%r b=%r c=%r lhs=%r rhs=%r" % (a, b, c, lhs, rhs)
            break
    rep.add("coassoc", "sliced coassociativity", ok, wit)

    # counit laws on slices
    ok, wit = True, None
    for _ in range(samples):
        a, b = rand(), rand()
        if mha.counit_leg(mha.delta_r(a, b), 1) != a.scaled(mha.counit(b)):
            ok, wit = False, "(i (x) eps) failed: a=%r b=%r" % (a, b)
            break
        if mha.counit_leg(mha.delta_l(a, b), 0) != b.scaled(mha.counit(a)):
            ok, wit = False, "(eps (x) i) failed: a=%r b=%r" % (a, b)
            break
    rep.add("counit", "(i(x)eps)Delta(a)(1(x)b) = a eps(b), and mirrored", ok, wit)

    # antipode laws: m(S (x) i)(Delta(a)(1 (x) b)) = eps(a) b
    #                m(i (x) S)((b (x) 1)Delta(a)) = eps(a) b
    ok, wit = True, None
    for _ in range(samples):
        a, b = rand(), rand()
        lhs = mha.mult_legs(apply_leg(mha.delta_r(a, b), 0, mha.antipode))
        if lhs != b.scaled(mha.counit(a)):
            ok, wit = False, "left antipode law: a=%r b=%r got %r" % (a, b, lhs)
            break
        lhs = mha.mult_legs(apply_leg(mha.delta_l(b, a), 1, mha.antipode))
        if lhs != b.scaled(mha.counit(a)):
            ok, wit = False, "right antipode law: a=%r b=%r got %r" % (a, b, lhs)
            break
    rep.add("antipode", "m(S(x)i)T1 = eps(.)id and m(i(x)S)T2 = eps(.)id", ok, wit)

    # bijectivity of S (regularity witness)
    ok, wit = True, None
    for _ in range(samples):
        a = rand()
        if mha.antipode(mha.antipode_inv(a)) != a or mha.antipode_inv(mha.antipode(a)) != a:
            ok, wit = False, "a=%r" % a
            break
    rep.add("antipode-bijective", "S o S^-1 = S^-1 o S = id", ok, wit)

    # T_k round trips
    for k in (1, 2, 3, 4):
        ok, wit = True, None
        for _ in range(samples):
            x2 = tensor(rand(), rand())
            if mha.inv_t(k)(mha.tmap(k)(x2)) != x2 or mha.tmap(k)(mha.inv_t(k)(x2)) != x2:
                ok, wit = False, "x=%r" % x2
                break
        rep.add("t%d-bijective" % k, "T%d and its inverse round-trip" % k, ok, wit)

    # the twist factors through T2: scriptT o T2 = T4
    ok, wit = True, None
    for _ in range(samples):
        x2 = tensor(rand(), rand())
        if mha.script_t(mha.t2(x2)) != mha.t4(x2):
            ok, wit = False, "x=%r" % x2
            break
    rep.add("twist-t2-t4", "scriptT o T2 = T4", ok, wit)

    # standard consequences, kept as smoke tests
    ok, wit = True, None
    for _ in range(samples):
        a, b = rand(), rand()
        if mha.counit(mha.antipode(a)) != mha.counit(a):
            ok, wit = False, "eps(S(a)) != eps(a): a=%r" % a
            break
        if mha.antipode(alg.mult(a, b)) != alg.mult(mha.antipode(b), mha.antipode(a)):
            ok, wit = False, "S(ab) != S(b)S(a): a=%r b=%r" % (a, b)
            break
    rep.add("antipode-antihom", "eps(S(a)) = eps(a); S(ab) = S(b)S(a)", ok, wit)

    return rep


def check_braid(mha, samples=100, seed=0, suite="braid"):
    """Both twist operators satisfy the braid relation on A (x) A (x) A;
    commutative / cocommutative instances collapse the right twist / twist
    to the flip map."""
    from .report import Report
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    rng = random.Random(seed)

    def rand():
        return random_alg_element(rng, mha)

    for lawid, op in (("braid-twist", mha.script_t),
                      ("braid-twist-prime", mha.script_t_prime)):
        ok, wit = True, None
        for _ in range(samples):
            x3 = tensor(tensor(rand(), rand()), rand())
            lhs = apply_pair_legs(apply_pair_legs(apply_pair_legs(x3, 0, op), 1, op), 0, op)
            rhs = apply_pair_legs(apply_pair_legs(apply_pair_legs(x3, 1, op), 0, op), 1, op)
            if lhs != rhs:
                ok, wit = False, "x=%r lhs=%r rhs=%r" % (x3, lhs, rhs)
                break
        rep.add(lawid, "(O(x)i)(i(x)O)(O(x)i) = (i(x)O)(O(x)i)(i(x)O)", ok, wit)

    # round trips of the twists
    ok, wit = True, None
    for _ in range(samples):
        x2 = tensor(rand(), rand())
        if mha.script_t_inv(mha.script_t(x2)) != x2:
            ok, wit = False, "twist round trip: x=%r" % x2
            break
        if mha.script_t_prime_inv(mha.script_t_prime(x2)) != x2:
            ok, wit = False, "twist-prime round trip: x=%r" % x2
            break
    rep.add("twist-invertible", "both twist operators round-trip with their inverses", ok, wit)

    if mha.cocommutative:
        ok, wit = True, None
        for _ in range(samples):
            x2 = tensor(rand(), rand())
            if mha.script_t(x2) != flip(x2):
                ok, wit = False, "x=%r" % x2
                break
        rep.add("cocommutative-flip", "cocommutative: scriptT = tau", ok, wit)

    if mha.commutative:
        ok, wit = True, None
        for _ in range(samples):
            x2 = tensor(rand(), rand())
            if mha.script_t_prime(x2) != flip(x2):
                ok, wit = False, "x=%r" % x2
                break
        rep.add("commutative-flip", "commutative: scriptT' = tau", ok, wit)

    return rep
