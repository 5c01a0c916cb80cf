"""Unital modules, extension of actions to multipliers, extended-module
elements as intensional maps, and comodules given by coaction slice maps.

A coaction is never materialized as Gamma(v) on non-unital instances; it is
carried by its right slice sliceR(v, a) = Gamma(v)(1 (x) a) = v_(0) (x) v_(1)a
and, when the coaction is two-sided-multiplier valued, also the left slice
sliceL(v, a) = (1 (x) a)Gamma(v) = v_(0) (x) a v_(1).
"""

import random

from .linear import Element, Ten, tensor, legs, make_sym, apply_leg
from .mha import Multiplier, random_element, random_alg_element


class UnitalModule:
    """A unital non-degenerate left module over a multiplier Hopf algebra.

    act_basis(a_sym, v_sym) gives the action of a basis algebra element on a
    basis module vector.  local_unit(velems, aelems) must return e in A with
    e.v = v for the given module elements and ea = ae = a for the given
    algebra elements (unital algebras just return the unit).
    """

    def __init__(self, mha, act_basis, *, basis=None, sample_basis=None,
                 local_unit=None, kind="other", arity=1, name="module"):
        self.mha = mha
        self.field = mha.field
        self.name = name
        # kind tags how the action factors ("mult", "counit", "trivial",
        # "adjoint", "tensor", "other"); tensor-module local units need it
        self.kind = kind
        self.arity = arity  # how many tensor legs a basis symbol occupies
        self.basis = list(basis) if basis is not None else None
        self._act = act_basis
        if sample_basis is not None:
            self._sample_basis = sample_basis
        elif self.basis is not None:
            self._sample_basis = lambda rng: rng.choice(self.basis)
        else:
            raise ValueError("infinite module needs a basis sampler")
        if local_unit is not None:
            self._local_unit = local_unit
        elif mha.algebra.has_unit:
            self._local_unit = lambda velems, aelems: mha.algebra.unit
        else:
            raise ValueError("non-unital instance: module %s needs a local unit rule" % name)

    def el(self, sym, coeff=None):
        return Element.basis(self.field, sym, coeff)

    def zero(self):
        return Element(self.field)

    def sample_basis(self, rng):
        return self._sample_basis(rng)

    def act(self, a, v):
        out = Element(self.field)
        for sa, ca in a.terms.items():
            for sv, cv in v.terms.items():
                out = out + self._act(sa, sv).scaled(ca * cv)
        return out

    def act_leg(self, x, i, a):
        """Act by a on leg i of a tensor whose leg i carries module symbols."""
        out = Element(self.field)
        for s, c in x.terms.items():
            ls = legs(s)
            img = self.act(a, self.el(ls[i]))
            for si, ci in img.terms.items():
                out = out + Element.basis(self.field,
                                          make_sym(ls[:i] + legs(si) + ls[i + 1:]),
                                          c * ci)
        return out

    def local_unit(self, velems, aelems=()):
        return self._local_unit(list(velems), list(aelems))


def random_mod_element(rng, module, max_support=3):
    return random_element(rng, module.field, module.sample_basis, max_support)


# -- extension of the action to multipliers ----------------------------------

def extend_action(module, f, x):
    """The action of a multiplier f on x: write x = e.x for a local unit e
    and set f.x = (f e).x, which is independent of the decomposition."""
    e = module.local_unit([x])
    return module.act(f.left(e), x)


class ExtendedElement:
    """An element of an extended module, kept intensionally as its defining
    map(s): lam realizes a |-> y.a and rho realizes a |-> a.y.  Equality is
    only ever decided extensionally on finitely many probe arguments."""

    def __init__(self, module, kind, lam=None, rho=None, label="extended"):
        if kind not in ("left", "right", "bimodule"):
            raise ValueError("kind must be left, right or bimodule")
        self.module = module
        self.kind = kind
        self._lam = lam
        self._rho = rho
        self.label = label

    def lam(self, a):
        if self._lam is None:
            raise ValueError("%s carries no lambda map" % self.label)
        return self._lam(a)

    def rho(self, a):
        if self._rho is None:
            raise ValueError("%s carries no rho map" % self.label)
        return self._rho(a)

    def acted_by(self, a):
        """The left A-action on extended elements: (a.rho)(a') = rho(a'a)."""
        alg = self.module.mha.algebra
        return ExtendedElement(self.module, self.kind,
                               rho=lambda ap: self.rho(alg.mult(ap, a)),
                               label="%r.%s" % (a, self.label))

    def agrees_with(self, other, probes):
        return all(self.rho(a) == other.rho(a) for a in probes)


def embed_rho(module, x):
    """The canonical embedding of x as the extended element a |-> a.x."""
    return ExtendedElement(module, "left",
                           rho=lambda a: module.act(a, x), label="rho(%r)" % x)


# -- coactions ----------------------------------------------------------------

class Coaction:
    """A right coaction on a unital module, carried by slice maps.

    slice_r_basis(v_sym, a_sym) -> Element of V (x) A realizing
    Gamma(v)(1 (x) a); slice_l_basis, when present, realizes (1 (x) a)Gamma(v)
    (two-sided multiplier-valued coactions carry both)."""

    def __init__(self, module, slice_r_basis, slice_l_basis=None,
                 name="coaction"):
        self.module = module
        self.mha = module.mha
        self.field = module.field
        self.name = name
        self._slice_r = slice_r_basis
        self._slice_l = slice_l_basis

    @property
    def has_slice_l(self):
        return self._slice_l is not None

    def _ext(self, f, v, a):
        out = Element(self.field)
        for sv, cv in v.terms.items():
            for sa, ca in a.terms.items():
                out = out + f(sv, sa).scaled(cv * ca)
        return out

    def slice_r(self, v, a):
        return self._ext(self._slice_r, v, a)

    def slice_l(self, v, a):
        if self._slice_l is None:
            raise ValueError("%s has no left slice" % self.name)
        return self._ext(self._slice_l, v, a)

    def slice_r_leg(self, x, i, a):
        """Apply sliceR(., a) to module leg i of a tensor, splicing the new
        A-leg immediately after it."""
        out = Element(self.field)
        for s, c in x.terms.items():
            ls = legs(s)
            img = self.slice_r(self.module.el(ls[i]), a)
            for si, ci in img.terms.items():
                out = out + Element.basis(
                    self.field, make_sym(ls[:i] + legs(si) + ls[i + 1:]), c * ci)
        return out


# -- standard fixtures ---------------------------------------------------------

def regular_module(mha, name=None):
    """A acting on itself by multiplication."""
    alg = mha.algebra
    return UnitalModule(
        mha, lambda a, v: alg.mult(alg.el(a), alg.el(v)),
        basis=alg.basis,
        sample_basis=None if alg.basis is not None else alg._sample_basis,
        local_unit=lambda velems, aelems: alg.local_unit(velems + aelems),
        kind="mult", name=name or (mha.name + ":regular"))


def counit_module(mha, name=None):
    """A acting on itself through the counit: a.v = eps(a) v."""
    alg = mha.algebra

    def lu(velems, aelems):
        if alg.has_unit:
            return alg.unit
        # any e with eps(e) = 1 absorbing the algebra elements works
        return alg.local_unit(aelems + [mha.eps_one])

    return UnitalModule(
        mha, lambda a, v: alg.el(v, mha.counit(alg.el(a))),
        basis=alg.basis,
        sample_basis=None if alg.basis is not None else alg._sample_basis,
        local_unit=lu, kind="counit", name=name or (mha.name + ":counit"))


def trivial_module(mha, name=None):
    """The base field as a module: a.lambda = eps(a) lambda."""
    alg = mha.algebra

    def lu(velems, aelems):
        if alg.has_unit:
            return alg.unit
        return alg.local_unit(list(aelems) + [mha.eps_one])

    return UnitalModule(
        mha, lambda a, v: Element.basis(mha.field, "*", mha.counit(alg.el(a))),
        basis=["*"], local_unit=lu, kind="trivial",
        name=name or (mha.name + ":trivial"))


def adjoint_module(mha, name=None):
    """A acting on itself by the inverse-antipode-twisted adjoint action
    a.v = a_(2) v S^-1(a_(1)); needs the materialized coproduct."""
    alg = mha.algebra

    def act(a, v):
        out = Element(mha.field)
        for s, c in mha.coproduct(alg.el(a)).terms.items():
            a1, a2 = legs(s)
            out = out + alg.mult(alg.mult(alg.el(a2), alg.el(v)),
                                 mha.antipode_inv(alg.el(a1))).scaled(c)
        return out

    return UnitalModule(mha, act, basis=alg.basis, kind="adjoint",
                        name=name or (mha.name + ":adjoint"))


def coproduct_coaction(module, name=None):
    """Gamma = Delta on a module whose carrier is A itself; both slices."""
    mha = module.mha
    return Coaction(module,
                    lambda v, a: mha.delta_r(mha.el(v), mha.el(a)),
                    lambda v, a: mha.delta_l2(mha.el(a), mha.el(v)),
                    name=name or (module.name + ":delta"))


def trivial_coaction(module, name=None):
    """Gamma(v) = v (x) 1 through slices (valid without a unit)."""
    field = module.field
    return Coaction(module,
                    lambda v, a: Element.basis(field, Ten((v, a))),
                    lambda v, a: Element.basis(field, Ten((v, a))),
                    name=name or (module.name + ":trivial"))


# -- checkers ------------------------------------------------------------------

def check_comodule(coaction, samples=50, seed=0, suite="comodule"):
    """All comodule laws, evaluated purely through slice compositions."""
    from .report import Report
    mha = coaction.mha
    alg = mha.algebra
    mod = coaction.module
    rep = Report(suite, "%s/%s" % (mha.name, coaction.name),
                 mha.field.name, seed, samples)
    rng = random.Random(seed)

    def rv():
        return random_mod_element(rng, mod)

    def ra():
        return random_alg_element(rng, mha)

    # Gamma(v) is a right-module map: Gamma(v)(1 (x) aa') agrees with
    # right-multiplying the second leg of Gamma(v)(1 (x) a) by a'
    ok, wit = True, None
    for _ in range(samples):
        v, a, ap = rv(), ra(), ra()
        lhs = coaction.slice_r(v, alg.mult(a, ap))
        rhs = Element(mha.field)
        for s, c in coaction.slice_r(v, a).terms.items():
            v0, v1 = legs(s)
            rhs = rhs + tensor(mod.el(v0), alg.mult(alg.el(v1), ap)).scaled(c)
        if lhs != rhs:
            ok, wit = False, "v=%r a=%r a'=%r lhs=%r rhs=%r" % (v, a, ap, lhs, rhs)
            break
    rep.add("coaction-module-map", "Gamma(v)(1(x)aa') = (Gamma(v)(1(x)a))(1(x)a')", ok, wit)

    # sliced coassociativity:
    #   v_(0) (x) v_(1)(1) x (x) v_(1)(2) y  =  v_(0)(0) (x) v_(0)(1) x (x) v_(1) y
    # LHS: replace the multiplier v_(1) by v_(1)c for a coproduct cover c of
    # (x, y); then Delta(v_(1)c)(x (x) y) = deltaR2(., x) right-multiplied by y.
    ok, wit = True, None
    for _ in range(samples):
        v, x, y = rv(), ra(), ra()
        c = mha.delta_cover([x], [y])
        lhs = Element(mha.field)
        for s, co in coaction.slice_r(v, c).terms.items():
            v0, w = legs(s)
            inner = mha.delta_r2(mha.el(w), x)
            for s2, c2 in inner.terms.items():
                w1, w2 = legs(s2)
                lhs = lhs + tensor(tensor(mod.el(v0), alg.el(w1)),
                                   alg.mult(alg.el(w2), y)).scaled(co * c2)
        rhs = coaction.slice_r_leg(coaction.slice_r(v, y), 0, x)
        if lhs != rhs:
            ok, wit = False, "v=%r x=%r y=%r lhs=%r rhs=%r" % (v, x, y, lhs, rhs)
            break
    rep.add("coaction-coassoc", "sliced coassociativity of Gamma", ok, wit)

    # counitary
    ok, wit = True, None
    for _ in range(samples):
        v, a = rv(), ra()
        got = Element(mha.field)
        for s, c in coaction.slice_r(v, a).terms.items():
            v0, v1 = legs(s)
            got = got + mod.el(v0, c * mha.counit(alg.el(v1)))
        if got != v.scaled(mha.counit(a)):
            ok, wit = False, "v=%r a=%r got=%r" % (v, a, got)
            break
    rep.add("coaction-counit", "(i (x) eps)(Gamma(v)(1(x)a)) = v eps(a)", ok, wit)

    if coaction.has_slice_l:
        # two-sided multiplier compatibility:
        # (1 (x) a)(Gamma(v)(1 (x) a')) = ((1 (x) a)Gamma(v))(1 (x) a')
        ok, wit = True, None
        for _ in range(samples):
            v, a, ap = rv(), ra(), ra()
            lhs = Element(mha.field)
            for s, c in coaction.slice_r(v, ap).terms.items():
                v0, v1 = legs(s)
                lhs = lhs + tensor(mod.el(v0), alg.mult(a, alg.el(v1))).scaled(c)
            rhs = Element(mha.field)
            for s, c in coaction.slice_l(v, a).terms.items():
                v0, v1 = legs(s)
                rhs = rhs + tensor(mod.el(v0), alg.mult(alg.el(v1), ap)).scaled(c)
            if lhs != rhs:
                ok, wit = False, "v=%r a=%r a'=%r" % (v, a, ap)
                break
        rep.add("coaction-two-sided", "left and right slices agree as a two-sided multiplier", ok, wit)

    return rep


def finite_dim_inclusion(coaction, probes=None, seed=0, suite="extended-modules"):
    """Certify that Gamma(v) factors as a finite sum sum_i v_i (x) m_i with
    each m_i a genuine multiplier, for every basis vector of a
    finite-dimensional carrier."""
    from .report import Report
    mha = coaction.mha
    alg = mha.algebra
    mod = coaction.module
    rep = Report(suite, "%s/%s" % (mha.name, coaction.name),
                 mha.field.name, seed, 0)
    if mod.basis is None:
        rep.add("finite-dim", "carrier is finite-dimensional", False,
                "module %s has no finite basis" % mod.name)
        return rep

    rng = random.Random(seed)
    if probes is None:
        probes = ([alg.el(s) for s in alg.basis] if alg.basis is not None
                  else [random_alg_element(rng, mha) for _ in range(10)])

    ok, wit = True, None
    compat_ok, compat_wit = True, None
    for vsym in mod.basis:
        v = mod.el(vsym)

        def component(img, wsym):
            out = Element(mha.field)
            for s, c in img.terms.items():
                w, a = legs(s)
                if w == wsym:
                    out = out + alg.el(a, c)
            return out

        used = set()
        for a in probes:
            for s in coaction.slice_r(v, a).terms:
                used.add(legs(s)[0])
        if len(used) > len(mod.basis):
            ok, wit = False, "factorization rank %d exceeds dim %d at v=%r" % (
                len(used), len(mod.basis), v)
            break
        for wsym in sorted(used, key=repr):
            m = Multiplier(
                left=lambda a, vv=v, ww=wsym: component(coaction.slice_r(vv, a), ww),
                right=(None if not coaction.has_slice_l else
                       lambda a, vv=v, ww=wsym: component(coaction.slice_l(vv, a), ww)),
                label="m[%r,%r]" % (vsym, wsym))
            if coaction.has_slice_l and not m.compatible_on(alg, probes, probes):
                compat_ok, compat_wit = False, "component at v=%r w=%r" % (vsym, wsym)
    rep.add("finite-dim-factorization",
            "Gamma(v) = sum_i v_i (x) m_i with at most dim(V) components", ok, wit)
    rep.add("finite-dim-multipliers",
            "each factor m_i is a compatible multiplier on probe elements",
            compat_ok, compat_wit)
    return rep


def check_extended_modules(mha, samples=40, seed=0, suite="extended-modules"):
    """Action extension to M(A), the rho embedding, and its module-map law."""
    from .report import Report
    alg = mha.algebra
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    rng = random.Random(seed)
    mod = regular_module(mha)

    def rx():
        return random_mod_element(rng, mod)

    def ra():
        return random_alg_element(rng, mha)

    # 1.x = x through the extension, and independence of the decomposition
    one = Multiplier(left=lambda y: y, right=lambda y: y, label="1")
    ok, wit = True, None
    for _ in range(samples):
        x = rx()
        if extend_action(mod, one, x) != x:
            ok, wit = False, "x=%r" % x
            break
        # same multiplier, two different decompositions x = e.x = e'.x
        e2 = mod.local_unit([x, rx()])
        f = Multiplier.from_element(alg, ra())
        if extend_action(mod, f, x) != mod.act(f.left(e2), x):
            ok, wit = False, "decomposition-dependent extension at x=%r" % x
            break
    rep.add("extend-action", "1.x = x and f.x independent of the decomposition", ok, wit)

    # for unital algebras the extension is the plain action (Y = X)
    if alg.has_unit:
        ok, wit = True, None
        for _ in range(samples):
            a, x = ra(), rx()
            if extend_action(mod, Multiplier.from_element(alg, a), x) != mod.act(a, x):
                ok, wit = False, "a=%r x=%r" % (a, x)
                break
        rep.add("unital-identity", "extension along A subset M(A) is the plain action", ok, wit)

    # rho embedding laws
    ok, wit = True, None
    inj_ok, inj_wit = True, None
    for _ in range(samples):
        x, a, ap = rx(), ra(), ra()
        r = embed_rho(mod, x)
        if r.rho(alg.mult(a, ap)) != mod.act(a, r.rho(ap)):
            ok, wit = False, "x=%r a=%r a'=%r" % (x, a, ap)
            break
        # (a.rho_x)(a') = rho_x(a'a) = rho_{a.x}(a')
        if not r.acted_by(a).agrees_with(embed_rho(mod, mod.act(a, x)), [ap, a]):
            ok, wit = False, "module-map law at x=%r a=%r" % (x, a)
            break
        if not x.is_zero():
            e = mod.local_unit([x])
            if r.rho(e).is_zero():
                inj_ok, inj_wit = False, "x=%r killed by its local unit" % x
    rep.add("rho-left-kind", "rho(aa') = a.rho(a') and a.rho_x = rho_{a.x}", ok, wit)
    rep.add("rho-injective", "x != 0 implies rho_x != 0 (witnessed on a local unit)",
            inj_ok, inj_wit)
    return rep
