"""Concrete desk-scale instances.

Registry names (used by the CLI):
  fun-Z        finitely supported functions on Z (commutative, non-unital)
  fun-Dinf     finitely supported functions on the infinite dihedral group
  grp-S3       group algebra of S3 (cocommutative, unital)
  grp-Z2       group algebra of Z2
  grp-Zn:<n>   group algebra of Z/n
  sweedler-H4  Sweedler's 4-dimensional Hopf algebra (S^2 != id)
  dual:<name>  dual of a finite-dimensional unital instance
"""

import random

from .linear import Element, Ten, tensor, legs, apply_leg
from .mha import Algebra, MultiplierHopfAlgebra, random_alg_element


class ConstructionError(Exception):
    """An instance ingredient failed its defining laws at construction."""


# -- discrete groups --------------------------------------------------------

class DiscreteGroup:
    """A group given by normal forms: elements are hashable labels that are
    unique per group element."""

    def __init__(self, name, identity, mul, inv, *, elements=None,
                 sample=None, abelian=False):
        self.name = name
        self.identity = identity
        self.mul = mul
        self.inv = inv
        self.elements = elements  # list for finite groups, else None
        self.abelian = abelian
        if sample is not None:
            self._sample = sample
        elif elements is not None:
            self._sample = lambda rng: rng.choice(self.elements)
        else:
            raise ValueError("infinite group needs a sampler")

    def sample(self, rng):
        return self._sample(rng)


def group_Z():
    return DiscreteGroup("Z", 0, lambda a, b: a + b, lambda a: -a,
                         sample=lambda rng: rng.randint(-5, 5), abelian=True)


def group_Zn(n):
    return DiscreteGroup("Z%d" % n, 0, lambda a, b: (a + b) % n,
                         lambda a: (-a) % n, elements=list(range(n)),
                         abelian=True)


def group_S3():
    # permutations of {0,1,2} as image tuples; (p*q)(i) = p(q(i))
    els = [(0, 1, 2), (0, 2, 1), (1, 0, 2), (1, 2, 0), (2, 0, 1), (2, 1, 0)]

    def mul(p, q):
        return tuple(p[q[i]] for i in range(3))

    def inv(p):
        out = [0, 0, 0]
        for i, pi in enumerate(p):
            out[pi] = i
        return tuple(out)

    return DiscreteGroup("S3", (0, 1, 2), mul, inv, elements=els)


def group_Dinf():
    # presentation <r, s | s^2 = e, s r s = r^-1>, normal form r^k s^e as (k, e)

    def mul(a, b):
        k, e = a
        l, f = b
        return (k + (l if e == 0 else -l), (e + f) % 2)

    def inv(a):
        k, e = a
        return ((-k if e == 0 else k), e)

    return DiscreteGroup("Dinf", (0, 0), mul, inv,
                         sample=lambda rng: (rng.randint(-4, 4), rng.randint(0, 1)))


# -- K(G): finitely supported functions on G --------------------------------

def function_algebra(group, field, name=None):
    """K(G) with basis {delta_g}: pointwise product, Delta(f)(p,q) = f(pq).

    Non-unital exactly when G is infinite; always commutative.
    """
    name = name or ("fun-" + group.name)
    g = group

    def mult_basis(a, b):
        return Element.basis(field, a) if a == b else Element(field)

    def support_union(elems):
        syms = set()
        for x in elems:
            syms.update(x.terms)
        return syms

    def local_unit(elems):
        return Element(field, {s: field.one() for s in support_union(elems)})

    unit = None
    if g.elements is not None:
        unit = Element(field, {s: field.one() for s in g.elements})

    alg = Algebra(field, mult_basis, basis=g.elements,
                  sample_basis=(None if g.elements is not None else g.sample),
                  unit=unit, local_unit=local_unit, name=name)

    one = field.one()

    # Delta(delta_g)(1 (x) delta_h) = delta_{g h^-1} (x) delta_h
    def delta_r(a, b):
        return Element.basis(field, Ten((g.mul(a, g.inv(b)), b)))

    # (delta_a (x) 1)Delta(delta_b) = delta_a (x) delta_{a^-1 b}
    def delta_l(a, b):
        return Element.basis(field, Ten((a, g.mul(g.inv(a), b))))

    # Delta(delta_g)(delta_b (x) 1) = delta_b (x) delta_{b^-1 g}
    def delta_r2(a, b):
        return Element.basis(field, Ten((b, g.mul(g.inv(b), a))))

    # (1 (x) delta_a)Delta(delta_b) = delta_{b a^-1} (x) delta_a
    def delta_l2(a, b):
        return Element.basis(field, Ten((g.mul(b, g.inv(a)), a)))

    def counit(a):
        return one if a == g.identity else field.zero()

    def antipode(a):
        return Element.basis(field, g.inv(a))

    def delta_cover(xs, ys):
        # Delta(c)(x (x) y) = x (x) y iff c is 1 on supp(x) * supp(y)
        prods = {g.mul(p, q) for p in support_union(xs) for q in support_union(ys)}
        return Element(field, {s: one for s in prods})

    return MultiplierHopfAlgebra(
        alg, delta_r=delta_r, delta_l=delta_l, delta_r2=delta_r2,
        delta_l2=delta_l2, counit=counit, antipode=antipode,
        antipode_inv=antipode, delta_cover=delta_cover,
        eps_one=Element.basis(field, g.identity),
        commutative=True, cocommutative=group.abelian, name=name)


# -- unital instances from a materialized coproduct --------------------------

def from_unital_coproduct(alg, coproduct_basis, counit, antipode_basis,
                          antipode_inv_basis, *, commutative, cocommutative,
                          name):
    """Build the four slices of a unital instance by multiplying the
    materialized coproduct inside A (x) A."""
    field = alg.field
    unit = alg.unit

    def cop(x):
        return x.map_terms(coproduct_basis)

    def delta_r(a, b):
        return alg.mult_tensor(cop(alg.el(a)), tensor(unit, alg.el(b)))

    def delta_l(a, b):
        return alg.mult_tensor(tensor(alg.el(a), unit), cop(alg.el(b)))

    def delta_r2(a, b):
        return alg.mult_tensor(cop(alg.el(a)), tensor(alg.el(b), unit))

    def delta_l2(a, b):
        return alg.mult_tensor(tensor(unit, alg.el(a)), cop(alg.el(b)))

    return MultiplierHopfAlgebra(
        alg, delta_r=delta_r, delta_l=delta_l, delta_r2=delta_r2,
        delta_l2=delta_l2, counit=counit, antipode=antipode_basis,
        antipode_inv=antipode_inv_basis, coproduct=coproduct_basis,
        commutative=commutative, cocommutative=cocommutative, name=name)


def group_algebra(group, field, name=None):
    """KG: basis = group elements, grouplike coproduct g -> g (x) g."""
    name = name or ("grp-" + group.name)
    g = group
    if g.elements is None:
        raise ValueError("group algebra instance requires a finite group")

    def mult_basis(a, b):
        return Element.basis(field, g.mul(a, b))

    unit = Element.basis(field, g.identity)
    alg = Algebra(field, mult_basis, basis=g.elements, unit=unit, name=name)

    one = field.one()
    return from_unital_coproduct(
        alg,
        lambda s: Element.basis(field, Ten((s, s))),
        lambda s: one,
        lambda s: Element.basis(field, g.inv(s)),
        lambda s: Element.basis(field, g.inv(s)),
        commutative=g.abelian, cocommutative=True, name=name)


# -- Sweedler's 4-dimensional Hopf algebra -----------------------------------

_H4_SYMS = {(0, 0): "1", (1, 0): "g", (0, 1): "x", (1, 1): "gx"}
_H4_EXPS = {v: k for k, v in _H4_SYMS.items()}


def sweedler_h4(field, name="sweedler-H4"):
    """Basis {1, g, x, gx}; g^2 = 1, x^2 = 0, xg = -gx; Delta(g) = g(x)g,
    Delta(x) = x(x)1 + g(x)x; S(g) = g, S(x) = -gx, so S^2 != id."""
    if field.from_int(2) == field.zero():
        raise ValueError("Sweedler H4 needs characteristic != 2")
    one = field.one()

    def mult_basis(a, b):
        i, j = _H4_EXPS[a]
        k, l = _H4_EXPS[b]
        if j + l >= 2:
            return Element(field)  # x^2 = 0
        sign = field.from_int(-1) if (j and k) else one  # x g = -g x
        return Element.basis(field, _H4_SYMS[((i + k) % 2, j + l)], sign)

    basis = ["1", "g", "x", "gx"]
    unit = Element.basis(field, "1")
    alg = Algebra(field, mult_basis, basis=basis, unit=unit, name=name)

    def e(s, c=None):
        return Element.basis(field, s, c)

    minus = field.from_int(-1)
    cop = {
        "1": tensor(e("1"), e("1")),
        "g": tensor(e("g"), e("g")),
        "x": tensor(e("x"), e("1")) + tensor(e("g"), e("x")),
        # Delta(gx) = Delta(g)Delta(x) = gx (x) g + 1 (x) gx
        "gx": tensor(e("gx"), e("g")) + tensor(e("1"), e("gx")),
    }
    counit = {"1": one, "g": one, "x": field.zero(), "gx": field.zero()}
    anti = {"1": e("1"), "g": e("g"), "x": e("gx", minus), "gx": e("x")}
    anti_inv = {"1": e("1"), "g": e("g"), "x": e("gx"), "gx": e("x", minus)}

    return from_unital_coproduct(
        alg, lambda s: cop[s], lambda s: counit[s],
        lambda s: anti[s], lambda s: anti_inv[s],
        commutative=False, cocommutative=False, name=name)


# -- dual of a finite-dimensional unital instance -----------------------------

def dual_sym(s):
    return ("^", s)


class DualHopf(MultiplierHopfAlgebra):
    """The dual Hopf algebra on the dual basis, with the canonical pairing
    and the two coregular actions (a |> p)(x) = p(xa), (p <| a)(x) = p(ax)."""

    def __init__(self, base, name):
        if base.algebra.basis is None or not base.algebra.has_unit:
            raise ValueError("dual requires a finite-dimensional unital instance")
        field = base.field
        self.base = base
        bsyms = base.algebra.basis
        n = len(bsyms)

        # structure constants of the base
        prod = {(a, b): base.algebra.mult(base.el(a), base.el(b))
                for a in bsyms for b in bsyms}
        cop = {a: base.coproduct(base.el(a)) for a in bsyms}

        def mult_basis(p, q):  # (pq)(a) = (p (x) q)(Delta(a))
            i, j = p[1], q[1]
            out = {}
            for a in bsyms:
                c = cop[a].coeff(Ten((i, j)))
                if c != field.zero():
                    out[dual_sym(a)] = c
            return Element(field, out)

        unit = Element(field, {dual_sym(a): base.counit(base.el(a)) for a in bsyms})
        alg = Algebra(field, mult_basis, basis=[dual_sym(a) for a in bsyms],
                      unit=unit, name=name)

        def cop_basis(p):  # <Delta(p), a (x) b> = p(ab)
            k = p[1]
            out = Element(field)
            for a in bsyms:
                for b in bsyms:
                    c = prod[(a, b)].coeff(k)
                    if c != field.zero():
                        out = out + Element.basis(field, Ten((dual_sym(a), dual_sym(b))), c)
            return out

        def counit(p):  # eps(p) = p(1)
            return base.algebra.unit.coeff(p[1])

        def anti(p):  # S(p) = p o S
            k = p[1]
            return Element(field, {dual_sym(a): base.antipode(base.el(a)).coeff(k)
                                   for a in bsyms})

        def anti_inv(p):
            k = p[1]
            return Element(field, {dual_sym(a): base.antipode_inv(base.el(a)).coeff(k)
                                   for a in bsyms})

        built = from_unital_coproduct(
            alg, cop_basis, counit, anti, anti_inv,
            commutative=base.cocommutative, cocommutative=base.commutative,
            name=name)
        super().__init__(alg, delta_r=lambda a, b: built.delta_r(built.el(a), built.el(b)),
                         delta_l=lambda a, b: built.delta_l(built.el(a), built.el(b)),
                         delta_r2=lambda a, b: built.delta_r2(built.el(a), built.el(b)),
                         delta_l2=lambda a, b: built.delta_l2(built.el(a), built.el(b)),
                         counit=counit, antipode=anti, antipode_inv=anti_inv,
                         coproduct=cop_basis,
                         commutative=base.cocommutative,
                         cocommutative=base.commutative, name=name)

    def pairing(self, p, a):
        """<p, a> for p in the dual, a in the base."""
        out = self.field.zero()
        for s, c in p.terms.items():
            out = out + c * a.coeff(s[1])
        return out

    def act_left(self, a, p):
        """a |> p, i.e. x -> p(xa)."""
        field = self.field
        out = Element(field)
        for s, cp in p.terms.items():
            k = s[1]
            for b in self.base.algebra.basis:
                c = self.base.algebra.mult(self.base.el(b), a).coeff(k)
                if c != field.zero():
                    out = out + Element.basis(field, dual_sym(b), cp * c)
        return out

    def act_right(self, p, a):
        """p <| a, i.e. x -> p(ax)."""
        field = self.field
        out = Element(field)
        for s, cp in p.terms.items():
            k = s[1]
            for b in self.base.algebra.basis:
                c = self.base.algebra.mult(a, self.base.el(b)).coeff(k)
                if c != field.zero():
                    out = out + Element.basis(field, dual_sym(b), cp * c)
        return out


def dual_hopf(base, name=None):
    return DualHopf(base, name or ("dual:" + base.name))


# -- integrals on finite-dimensional unital instances -------------------------

class IntegralData:
    """A left integral functional phi and a left cointegral t with phi(t)=1."""

    def __init__(self, mha, phi_coeffs, t):
        self.mha = mha
        self.phi_coeffs = phi_coeffs  # basis sym -> scalar
        self.t = t

    def phi(self, x):
        out = self.mha.field.zero()
        for s, c in x.terms.items():
            out = out + c * self.phi_coeffs.get(s, self.mha.field.zero())
        return out

    def phi_as_dual(self):
        return Element(self.mha.field,
                       {dual_sym(s): c for s, c in self.phi_coeffs.items()})

    def verify(self):
        """Re-check both defining equations on every basis element."""
        mha = self.mha
        for s in mha.algebra.basis:
            a = mha.el(s)
            lhs = Element(mha.field)
            for ts, c in mha.coproduct(a).terms.items():
                l1, l2 = legs(ts)
                lhs = lhs + mha.el(l1, c * self.phi_coeffs.get(l2, mha.field.zero()))
            if lhs != mha.algebra.unit.scaled(self.phi(a)):
                return False, "integral equation fails at a=%r" % a
            if mha.algebra.mult(a, self.t) != self.t.scaled(mha.counit(a)):
                return False, "cointegral equation fails at a=%r" % a
        if self.phi(self.t) != mha.field.one():
            return False, "phi(t) != 1"
        return True, None


def compute_integrals(mha):
    """Solve the defining linear systems for (phi, t) and normalize phi(t)=1.

    Raises ConstructionError when no normalized solution exists over the
    configured field.
    """
    from .linear import kernel_basis
    if mha.algebra.basis is None or not mha.algebra.has_unit:
        raise ValueError("integrals are computed on finite-dimensional unital instances only")
    field = mha.field
    bsyms = mha.algebra.basis
    unit = mha.algebra.unit

    # (i (x) phi)Delta(a) = phi(a) 1: one equation per (basis a, ambient u)
    rows = []
    for asym in bsyms:
        d2 = mha.coproduct(mha.el(asym))
        per_u = {}
        for ts, c in d2.terms.items():
            u, t = legs(ts)
            per_u.setdefault(u, {})
            per_u[u][("phi", t)] = per_u[u].get(("phi", t), field.zero()) + c
        for u in set(per_u) | set(unit.terms):
            row = dict(per_u.get(u, {}))
            key = ("phi", asym)
            row[key] = row.get(key, field.zero()) - unit.coeff(u)
            rows.append(Element(field, row))
    phis = kernel_basis(rows, syms=[("phi", s) for s in bsyms])

    # a t = eps(a) t: one equation per (basis a, ambient u)
    rows = []
    for asym in bsyms:
        eps = mha.counit(mha.el(asym))
        per_u = {}
        for ssym in bsyms:
            prod = mha.algebra.mult(mha.el(asym), mha.el(ssym))
            for u, c in prod.terms.items():
                per_u.setdefault(u, {})
                per_u[u][("t", ssym)] = per_u[u].get(("t", ssym), field.zero()) + c
        for u in set(per_u) | set(bsyms):
            row = dict(per_u.get(u, {}))
            key = ("t", u)
            row[key] = row.get(key, field.zero()) - eps
            rows.append(Element(field, row))
    ts = kernel_basis(rows, syms=[("t", s) for s in bsyms])

    if not phis or not ts:
        raise ConstructionError("no nonzero integral/cointegral over %s" % field.name)

    # pick the first kernel vectors (deterministic order) and normalize
    for phi_vec in phis:
        for t_vec in ts:
            phi_coeffs = {s[1]: c for s, c in phi_vec.terms.items()}
            t = Element(field, {s[1]: c for s, c in t_vec.terms.items()})
            data = IntegralData(mha, phi_coeffs, t)
            norm = data.phi(t)
            if norm != field.zero():
                data.phi_coeffs = {s: c / norm for s, c in phi_coeffs.items()}
                ok, wit = data.verify()
                if not ok:
                    raise ConstructionError("integral verification failed: %s" % wit)
                return data
    raise ConstructionError("phi(t) = 0 for every kernel pair; cannot normalize")


# -- Hopf algebra automorphisms ----------------------------------------------

class HopfAutomorphism:
    """A coproduct-respecting algebra automorphism, validated at construction."""

    def __init__(self, mha, fwd, inv, name="aut", samples=24, seed=0, _checked=False):
        self.mha = mha
        self._fwd = fwd  # Element -> Element
        self._inv = inv
        self.name = name
        if not _checked:
            self._validate(samples, seed)

    def __call__(self, x):
        return self._fwd(x)

    def inverse(self, x):
        return self._inv(x)

    def inverted(self):
        return HopfAutomorphism(self.mha, self._inv, self._fwd,
                                name=self.name + "^-1", _checked=True)

    def composed(self, other):
        """self o other."""
        return HopfAutomorphism(
            self.mha, lambda x: self._fwd(other._fwd(x)),
            lambda x: other._inv(self._inv(x)),
            name="%s.%s" % (self.name, other.name), _checked=True)

    def is_identity_on(self, elems):
        return all(self(x) == x for x in elems)

    def _validate(self, samples, seed):
        mha = self.mha
        rng = random.Random(seed)
        probe = ([mha.el(s) for s in mha.algebra.basis]
                 if mha.algebra.basis is not None
                 else [random_alg_element(rng, mha) for _ in range(samples)])
        for a in probe:
            if self._inv(self._fwd(a)) != a or self._fwd(self._inv(a)) != a:
                raise ConstructionError("%s: not a bijection at a=%r" % (self.name, a))
        for _ in range(samples):
            a = probe[rng.randrange(len(probe))]
            b = probe[rng.randrange(len(probe))]
            if self._fwd(mha.algebra.mult(a, b)) != mha.algebra.mult(self._fwd(a), self._fwd(b)):
                raise ConstructionError(
                    "%s: not an algebra map at a=%r b=%r" % (self.name, a, b))
            # sliced form of (Delta o alpha) = (alpha (x) alpha) o Delta
            lhs = mha.delta_r(self._fwd(a), self._fwd(b))
            rhs = apply_leg(apply_leg(mha.delta_r(a, b), 0, self._fwd), 1, self._fwd)
            if lhs != rhs:
                raise ConstructionError(
                    "%s: does not respect the coproduct at a=%r b=%r" % (self.name, a, b))


def identity_automorphism(mha):
    return HopfAutomorphism(mha, lambda x: x, lambda x: x, name="id", _checked=True)


def group_map_automorphism(mha, group, phi, phi_inv, name):
    """Lift a group automorphism to K(G) or KG (both have group-element
    basis symbols)."""
    fwd = lambda x: x.map_terms(lambda s: Element.basis(mha.field, phi(s)))
    inv = lambda x: x.map_terms(lambda s: Element.basis(mha.field, phi_inv(s)))
    return HopfAutomorphism(mha, fwd, inv, name=name)


def inner_automorphism(mha, g, name=None):
    """Conjugation by a group element on a group algebra."""
    alg = mha.algebra
    ge = mha.el(g)

    def fwd(x):
        return alg.mult(alg.mult(ge, x), mha.antipode(ge))

    def inv(x):
        return alg.mult(alg.mult(mha.antipode(ge), x), ge)

    return HopfAutomorphism(mha, fwd, inv, name=name or ("conj:%r" % (g,)))


def h4_scaling_automorphism(mha, lam, name=None):
    """g -> g, x -> lam * x on Sweedler H4 (lam invertible)."""
    field = mha.field
    if lam == field.zero():
        raise ConstructionError("scaling parameter must be invertible")
    lam_inv = field.one() / lam
    scale = {"1": field.one(), "g": field.one(), "x": lam, "gx": lam}
    scale_inv = {"1": field.one(), "g": field.one(), "x": lam_inv, "gx": lam_inv}

    def fwd(x):
        return x.map_terms(lambda s: Element.basis(field, s, scale[s]))

    def inv(x):
        return x.map_terms(lambda s: Element.basis(field, s, scale_inv[s]))

    return HopfAutomorphism(mha, fwd, inv, name=name or ("scale:%s" % lam))


# -- quasitriangular structures ----------------------------------------------

class QTStructure:
    """An invertible R in A (x) A (materialized; finite unital instances).

    The four standard axioms are checked by check_qt below; the Sweedler-leg
    fusion identities are evaluated with materialized coproducts.
    """

    def __init__(self, mha, r, r_inv):
        self.mha = mha
        self.r = r
        self.r_inv = r_inv

    def check(self, report):
        mha = self.mha
        alg = mha.algebra
        unit2 = tensor(alg.unit, alg.unit)
        report.check("qt-invertible", "R R^-1 = R^-1 R = 1 (x) 1",
                     alg.mult_tensor(self.r, self.r_inv), unit2)
        report.check("qt-invertible-2", "R^-1 R = 1 (x) 1",
                     alg.mult_tensor(self.r_inv, self.r), unit2)
        ok, wit = True, None
        from .linear import flip
        for s in alg.basis:
            d = mha.coproduct(mha.el(s))
            if alg.mult_tensor(flip(d), self.r) != alg.mult_tensor(self.r, d):
                ok, wit = False, "a=%r" % s
                break
        report.add("qt-intertwine", "Delta^cop(a) R = R Delta(a)", ok, wit)

        def widen(x2, positions):
            # embed an arity-2 element into legs `positions` of arity 3
            out = Element(mha.field)
            for ts, c in x2.terms.items():
                base = [None, None, None]
                a, b = legs(ts)
                base[positions[0]], base[positions[1]] = a, b
                pieces = [mha.el(base[i]) if base[i] is not None else alg.unit
                          for i in range(3)]
                out = out + tensor(tensor(pieces[0], pieces[1]), pieces[2]).scaled(c)
            return out

        r13_23 = alg.mult_tensor(widen(self.r, (0, 2)), widen(self.r, (1, 2)))
        lhs = apply_leg(self.r, 0, mha.coproduct)
        report.check("qt-fusion-left", "(Delta (x) i)R = R13 R23", lhs, r13_23)
        r13_12 = alg.mult_tensor(widen(self.r, (0, 2)), widen(self.r, (0, 1)))
        lhs = apply_leg(self.r, 1, mha.coproduct)
        report.check("qt-fusion-right", "(i (x) Delta)R = R13 R12", lhs, r13_12)
        return report


def qt_for_cyclic(n, field, mha=None):
    """R = n^-1 sum_ij w^(ij) g^i (x) g^j on the group algebra of Z/n, where
    w is a primitive n-th root of unity in the field."""
    mha = mha or group_algebra(group_Zn(n), field)
    if hasattr(field, "primitive_root_of_unity"):
        w = field.primitive_root_of_unity(n)
    else:
        w = {1: field.one(), 2: field.from_int(-1)}.get(n)
    if w is None:
        raise ConstructionError("no primitive %d-th root of unity in %s" % (n, field.name))
    n_inv = field.one() / field.from_int(n)

    def build(root):
        out = Element(field)
        for i in range(n):
            for j in range(n):
                c = field.one()
                for _ in range((i * j) % n):
                    c = c * root
                out = out + Element.basis(field, Ten((i, j)), c * n_inv)
        return out

    w_inv = field.one() / w
    return QTStructure(mha, build(w), build(w_inv))


# -- registry -----------------------------------------------------------------

def build_instance(name, field):
    """Construct a registered instance by name."""
    if name == "fun-Z":
        return function_algebra(group_Z(), field, name)
    if name == "fun-Dinf":
        return function_algebra(group_Dinf(), field, name)
    if name == "grp-S3":
        return group_algebra(group_S3(), field, name)
    if name == "grp-Z2":
        return group_algebra(group_Zn(2), field, "grp-Z2")
    if name.startswith("grp-Zn:"):
        return group_algebra(group_Zn(int(name.split(":")[1])), field, name)
    if name == "sweedler-H4":
        return sweedler_h4(field, name)
    if name.startswith("dual:"):
        return dual_hopf(build_instance(name[5:], field), name)
    raise KeyError("unknown instance %r" % name)


INSTANCE_NAMES = ["fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "grp-Zn:<n>",
                  "sweedler-H4", "dual:<name>"]

#: the five core instances exercised by every suite
CORE_INSTANCES = ["fun-Z", "fun-Dinf", "grp-S3", "grp-Z2", "sweedler-H4"]
