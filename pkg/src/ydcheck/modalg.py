"""Module algebras, comodule algebras, their compatibility, coactions induced
by a quasitriangular structure, mixed (H, A)-modules, and the balanced tensor
product over a module algebra with its monoidal laws.

The laws checked here, in Sweedler legs:

    a.(xx')          = (a_(1).x)(a_(2).x')              [module algebra]
    (a.x)x'          = a_(1).(x (S(a_(2)).x'))          [extension, left]
    x(a.x')          = a_(2).((S^-1(a_(1)).x) x')       [extension, right]
    Gamma(xy)        = Gamma(x)Gamma(y)                 [comodule algebra]
    xy               = y_(0)(y_(1).x)                   [A-commutativity]
    rho(h)           = tau(R)(h (x) 1)                  [induced coaction]
    a.(h -> m)       = (a_(1).h) -> (a_(2).m)           [mixed action]
    rho(h -> m)(1 (x) a') = h_(0) -> m_(0) (x) m_(1) h_(1) a'   [mixed coaction]
    m <- h           = h_(0) -> (h_(1).m)               [right H-action]

Everything is evaluated through slice maps; coproducts are only materialized
where an instance carries one.  Balanced tensor products quotient by the
relators (m <- h) (x) n - m (x) (h -> n); well-definedness of the descended
structures is tested (relator stability), never assumed.
"""

import random

from .linear import Element, Ten, tensor, legs, make_sym, QuotientSpace
from .mha import Algebra, random_element, random_alg_element
from .modules import (UnitalModule, Coaction, check_comodule, counit_module,
                      adjoint_module, regular_module, trivial_module,
                      coproduct_coaction, trivial_coaction, random_mod_element)
from .yd import YDModule, check_yd, split_sym, braiding_c
from .report import Report


def _rand(rng, field, basis, max_support=2):
    return random_element(rng, field, lambda r: r.choice(basis), max_support)


def _merge(rep, sub, tag):
    """Fold a sub-report into rep, tagging law ids with the fixture name."""
    for r in sub.laws:
        rep.add("%s[%s]" % (r.law, tag), r.statement, r.ok, r.witness)


def _materialized(mha):
    return getattr(mha, "_coproduct", None) is not None


def project_legs(quot, x, start, count):
    """Project legs [start, start+count) of every term of x through a
    quotient whose ambient symbols have exactly `count` legs, keeping the
    surrounding legs in place."""
    out = Element(x.field)
    for s, c in x.terms.items():
        ls = legs(s)
        head = make_sym(ls[start:start + count])
        img = quot.project(Element.basis(x.field, head))
        for si, ci in img.terms.items():
            out = out + Element.basis(
                x.field, make_sym(ls[:start] + legs(si) + ls[start + count:]),
                c * ci)
    return out


# -- module algebras -----------------------------------------------------------

class ModuleAlgebra:
    """An algebra R whose carrier is also a unital A-module; the joint laws
    are verified by check_module_algebra."""

    def __init__(self, alg, module, name=None):
        self.alg = alg
        self.module = module
        self.mha = module.mha
        self.field = module.field
        self.name = name or module.name

    def act(self, a, x):
        return self.module.act(a, x)


def counit_module_algebra(mha, name=None):
    """R = A with the counit action a.x = eps(a) x."""
    return ModuleAlgebra(mha.algebra, counit_module(mha),
                         name=name or (mha.name + ":counit-modalg"))


def adjoint_module_algebra(mha, name=None):
    """R = A with the twisted adjoint action a.x = a_(2) x S^-1(a_(1));
    a module algebra on cocommutative instances."""
    return ModuleAlgebra(mha.algebra, adjoint_module(mha),
                         name=name or (mha.name + ":adjoint-modalg"))


def regular_module_algebra(mha, name=None):
    """R = A with the left regular action: NOT a module algebra in general;
    kept as the standard negative control."""
    return ModuleAlgebra(mha.algebra, regular_module(mha),
                         name=name or (mha.name + ":regular-modalg"))


def translation_module_algebra(mha, group, name=None):
    """Functions on a finite group under pointwise product, with the group
    algebra acting by right translation: (g.f)(x) = f(xg), so g.d_y =
    d_{y g^-1}.  Translation is an algebra automorphism, hence a module
    algebra action."""
    field = mha.field
    els = list(group.elements)
    unit = Element(field)
    for x in els:
        unit = unit + Element.basis(field, x)
    fun = Algebra(field,
                  lambda a, b: Element.basis(field, a) if a == b else Element(field),
                  basis=els, unit=unit, name="fun(%s)" % mha.name)
    mod = UnitalModule(
        mha, lambda g, y: Element.basis(field, group.mul(y, group.inv(g))),
        basis=els, kind="other", name=(name or (mha.name + ":translation")))
    return ModuleAlgebra(fun, mod, name=name or (mha.name + ":translation"))


def check_module_algebra(ma, samples=40, seed=0, suite="module-algebra"):
    """The product law, both extension laws (where a coproduct is
    materialized) and the unit law."""
    mha = ma.mha
    alg = mha.algebra
    rep = Report(suite, "%s/%s" % (mha.name, ma.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)

    def rx():
        return random_mod_element(rng, ma.module)

    def ra():
        return random_alg_element(rng, mha)

    ok, wit = True, None
    for _ in range(samples):
        a, x, xp = ra(), rx(), rx()
        lhs = ma.act(a, ma.alg.mult(x, xp))
        e = ma.module.local_unit([xp])
        rhs = Element(mha.field)
        for s, c in mha.delta_r(a, e).terms.items():
            p, q = legs(s)
            rhs = rhs + ma.alg.mult(ma.act(alg.el(p), x),
                                    ma.act(alg.el(q), xp)).scaled(c)
        if lhs != rhs:
            ok, wit = False, "a=%r x=%r x'=%r lhs=%r rhs=%r" % (a, x, xp, lhs, rhs)
            break
    rep.add("modalg-product", "a.(xx') = (a_(1).x)(a_(2).x')", ok, wit)

    if _materialized(mha):
        ok, wit = True, None
        ok2, wit2 = True, None
        for _ in range(samples):
            a, x, xp = ra(), rx(), rx()
            cop = mha.coproduct(a)
            lhs = ma.alg.mult(ma.act(a, x), xp)
            rhs = Element(mha.field)
            for s, c in cop.terms.items():
                a1, a2 = legs(s)
                rhs = rhs + ma.act(alg.el(a1), ma.alg.mult(
                    x, ma.act(mha.antipode(alg.el(a2)), xp))).scaled(c)
            if ok and lhs != rhs:
                ok, wit = False, "a=%r x=%r x'=%r" % (a, x, xp)
            lhs2 = ma.alg.mult(x, ma.act(a, xp))
            rhs2 = Element(mha.field)
            for s, c in cop.terms.items():
                a1, a2 = legs(s)
                rhs2 = rhs2 + ma.act(alg.el(a2), ma.alg.mult(
                    ma.act(mha.antipode_inv(alg.el(a1)), x), xp)).scaled(c)
            if ok2 and lhs2 != rhs2:
                ok2, wit2 = False, "a=%r x=%r x'=%r" % (a, x, xp)
            if not ok and not ok2:
                break
        rep.add("modalg-extend-left", "(a.x)x' = a_(1).(x (S(a_(2)).x'))", ok, wit)
        rep.add("modalg-extend-right", "x(a.x') = a_(2).((S^-1(a_(1)).x) x')",
                ok2, wit2)

    if ma.alg.has_unit:
        ok, wit = True, None
        for _ in range(samples):
            a = ra()
            if ma.act(a, ma.alg.unit) != ma.alg.unit.scaled(mha.counit(a)):
                ok, wit = False, "a=%r" % a
                break
        rep.add("modalg-unit", "a.1 = eps(a) 1", ok, wit)
    return rep


# -- comodule algebras ---------------------------------------------------------

def check_comodule_algebra(alg, coaction, samples=40, seed=0,
                           suite="module-algebra"):
    """All comodule laws plus multiplicativity of the coaction, through
    slices.  Finiteness of the slice outputs holds by construction (slices
    return finite sums); the counit law doubles as injectivity."""
    mha = coaction.mha
    mod = coaction.module
    rep = Report(suite, "%s/%s" % (mha.name, coaction.name),
                 mha.field.name, seed, samples)
    rep.laws.extend(check_comodule(coaction, samples, seed, suite).laws)
    rng = random.Random(seed + 1)

    def rx():
        return random_mod_element(rng, mod)

    def ra():
        return random_alg_element(rng, mha)

    ok, wit = True, None
    for _ in range(samples):
        x, y, a = rx(), rx(), ra()
        lhs = coaction.slice_r(alg.mult(x, y), a)
        rhs = Element(mha.field)
        for s, c in coaction.slice_r(y, a).terms.items():
            y0, m = split_sym(s, mod.arity)
            for s2, c2 in coaction.slice_r(x, mha.el(m)).terms.items():
                x0, k = split_sym(s2, mod.arity)
                rhs = rhs + tensor(alg.mult(mod.el(x0), mod.el(y0)),
                                   mha.el(k)).scaled(c * c2)
        if lhs != rhs:
            ok, wit = False, "x=%r y=%r a=%r lhs=%r rhs=%r" % (x, y, a, lhs, rhs)
            break
    rep.add("comodalg-multiplicative",
            "Gamma(xy)(1 (x) a) = Gamma(x)Gamma(y)(1 (x) a)", ok, wit)

    if coaction.has_slice_l:
        ok, wit = True, None
        for _ in range(samples):
            x, y, a = rx(), rx(), ra()
            lhs = coaction.slice_l(alg.mult(x, y), a)
            rhs = Element(mha.field)
            for s, c in coaction.slice_l(x, a).terms.items():
                x0, m = split_sym(s, mod.arity)
                for s2, c2 in coaction.slice_l(y, mha.el(m)).terms.items():
                    y0, k = split_sym(s2, mod.arity)
                    rhs = rhs + tensor(alg.mult(mod.el(x0), mod.el(y0)),
                                       mha.el(k)).scaled(c * c2)
            if lhs != rhs:
                ok, wit = False, "x=%r y=%r a=%r" % (x, y, a)
                break
        rep.add("comodalg-multiplicative-left",
                "(1 (x) a)Gamma(xy) = ((1 (x) a)Gamma(x))Gamma(y)", ok, wit)
    return rep


# -- Yetter-Drinfel'd module algebras ------------------------------------------

class YDModuleAlgebra:
    """A module algebra whose carrier also carries a compatible coaction;
    jointly an algebra object of the YD category."""

    def __init__(self, ma, coaction, name=None):
        if coaction.module is not ma.module:
            raise ValueError("coaction built on a different carrier")
        self.ma = ma
        self.alg = ma.alg
        self.module = ma.module
        self.coaction = coaction
        self.mha = ma.mha
        self.field = ma.field
        self.name = name or ma.name

    def act(self, a, x):
        return self.module.act(a, x)


def trivial_yd_module_algebra(mha, name=None):
    """The base field as a YD module algebra (one-dimensional carrier)."""
    field = mha.field
    alg = Algebra(field, lambda a, b: Element.basis(field, "*"),
                  basis=["*"], unit=Element.basis(field, "*"), name="K")
    mod = trivial_module(mha)
    return YDModuleAlgebra(ModuleAlgebra(alg, mod), trivial_coaction(mod),
                           name=name or "K")


def counit_yd_module_algebra(mha, name=None):
    """R = A with the counit action and the trivial coaction; valid over any
    instance, and A-commutative exactly when A is commutative."""
    ma = counit_module_algebra(mha)
    return YDModuleAlgebra(ma, trivial_coaction(ma.module),
                           name=name or (mha.name + ":counit-trivial"))


def adjoint_trivial_yd_module_algebra(mha, name=None):
    """R = A with the twisted adjoint action and the trivial coaction; a YD
    module algebra on cocommutative instances (a_(2) (x) a_(3)S^-1(a_(1))
    collapses to a (x) 1)."""
    if not mha.cocommutative:
        raise ValueError("the adjoint/trivial pair needs a cocommutative instance")
    ma = adjoint_module_algebra(mha)
    return YDModuleAlgebra(ma, trivial_coaction(ma.module),
                           name=name or (mha.name + ":adjoint-trivial"))


def canonical_yd_module_algebra(mha, name=None):
    """R = A with the twisted adjoint action and Gamma = Delta; needs a
    materialized coproduct and cocommutativity for the product law."""
    ma = adjoint_module_algebra(mha)
    return YDModuleAlgebra(ma, coproduct_coaction(ma.module),
                           name=name or (mha.name + ":adjoint-delta"))


def subgroup_yd_module_algebra(mha, syms, name=None):
    """The span of a multiplicatively closed set of basis symbols (containing
    the unit), with the counit action and trivial coaction."""
    alg = mha.algebra
    sub = Algebra(mha.field,
                  lambda a, b: alg.mult(alg.el(a), alg.el(b)),
                  basis=list(syms), unit=alg.unit,
                  name=mha.name + ":sub")
    mod = UnitalModule(mha,
                       lambda a, v: sub.el(v, mha.counit(alg.el(a))),
                       basis=list(syms), kind="counit",
                       name=(name or (mha.name + ":sub")))
    return YDModuleAlgebra(ModuleAlgebra(sub, mod), trivial_coaction(mod),
                           name=name or (mha.name + ":sub"))


def cyclic_subgroup_syms(alg, cap=12):
    """Basis symbols of a cyclic unital subalgebra generated by a non-unit
    basis symbol whose powers stay single basis vectors, or None."""
    if alg.basis is None or not alg.has_unit or len(alg.unit.terms) != 1:
        return None
    (us, uc), = alg.unit.terms.items()
    if uc != alg.field.one():
        return None
    for s in alg.basis:
        if s == us:
            continue
        powers = []
        cur = alg.el(s)
        for _ in range(cap):
            if len(cur.terms) != 1 or next(iter(cur.terms.values())) != alg.field.one():
                powers = None
                break
            cs = next(iter(cur.terms))
            if cs == us:
                return [us] + powers
            if cs in powers:
                powers = None
                break
            powers.append(cs)
            cur = alg.mult(cur, alg.el(s))
    return None


def check_a_commutative(H, samples=40, seed=0, suite="module-algebra"):
    """xy = y_(0)(y_(1).x), with y_(1) acting through a local unit of x."""
    mha = H.mha
    rep = Report(suite, "%s/%s" % (mha.name, H.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)
    ok, wit = True, None
    for _ in range(samples):
        x = random_mod_element(rng, H.module)
        y = random_mod_element(rng, H.module)
        lhs = H.alg.mult(x, y)
        e = H.module.local_unit([x])
        rhs = Element(mha.field)
        for s, c in H.coaction.slice_r(y, e).terms.items():
            y0, m = split_sym(s, H.module.arity)
            rhs = rhs + H.alg.mult(H.module.el(y0),
                                   H.act(mha.el(m), x)).scaled(c)
        if lhs != rhs:
            ok, wit = False, "x=%r y=%r lhs=%r rhs=%r" % (x, y, lhs, rhs)
            break
    rep.add("a-commutative", "xy = y_(0)(y_(1).x)", ok, wit)
    return rep


def check_yd_module_algebra(H, samples=30, seed=0, suite="module-algebra"):
    """Module algebra + comodule algebra + the YD compatibility on one
    carrier."""
    rep = Report(suite, "%s/%s" % (H.mha.name, H.name), H.field.name,
                 seed, samples)
    rep.laws.extend(check_module_algebra(H.ma, samples, seed, suite).laws)
    rep.laws.extend(check_comodule_algebra(H.alg, H.coaction, samples, seed,
                                           suite).laws)
    rep.laws.extend(check_yd(YDModule(H.module, H.coaction, name=H.name),
                             samples, seed, suite).laws)
    return rep


# -- coactions induced by a quasitriangular structure --------------------------

def coaction_from_qt(module, qt, name=None):
    """rho(h) = tau(R)(h (x) 1): sliceR(h, a) = (r_(2).h) (x) r_(1)a and
    sliceL(h, a) = (r_(2).h) (x) a r_(1), summed over the materialized R."""
    mha = module.mha
    alg = mha.algebra

    def slice_r(vsym, asym):
        out = Element(mha.field)
        for s, c in qt.r.terms.items():
            i, j = legs(s)
            out = out + tensor(module.act(alg.el(j), module.el(vsym)),
                               alg.mult(alg.el(i), alg.el(asym))).scaled(c)
        return out

    def slice_l(vsym, asym):
        out = Element(mha.field)
        for s, c in qt.r.terms.items():
            i, j = legs(s)
            out = out + tensor(module.act(alg.el(j), module.el(vsym)),
                               alg.mult(alg.el(asym), alg.el(i))).scaled(c)
        return out

    return Coaction(module, slice_r, slice_l,
                    name=name or (module.name + ":qt-coaction"))


def check_qt_coaction(ma, qt, samples=30, seed=0, suite="qt-coaction"):
    """End to end: the quasitriangular axioms, the module-algebra laws, the
    induced coaction's comodule-algebra and YD laws, and the induced braiding
    C(m (x) n) = tau(R)(n (x) m) against the categorical braiding."""
    mha = ma.mha
    alg = mha.algebra
    rep = Report(suite, "%s/%s" % (mha.name, ma.name), mha.field.name,
                 seed, samples)
    qt.check(rep)
    rep.laws.extend(check_module_algebra(ma, samples, seed, suite).laws)
    coa = coaction_from_qt(ma.module, qt)
    rep.laws.extend(check_comodule_algebra(ma.alg, coa, samples, seed,
                                           suite).laws)
    yd = YDModule(ma.module, coa, name=ma.name + ":qt")
    rep.laws.extend(check_yd(yd, samples, seed + 1, suite).laws)

    rng = random.Random(seed + 2)
    ok, wit = True, None
    for _ in range(samples):
        m = random_mod_element(rng, ma.module)
        n = random_mod_element(rng, ma.module)
        direct = Element(mha.field)
        for s, c in qt.r.terms.items():
            i, j = legs(s)
            direct = direct + tensor(ma.act(alg.el(j), n),
                                     ma.act(alg.el(i), m)).scaled(c)
        via = braiding_c(ma.module, yd, tensor(m, n))
        if direct != via:
            ok, wit = False, "m=%r n=%r direct=%r via=%r" % (m, n, direct, via)
            break
    rep.add("qt-braiding",
            "C(m (x) n) = tau(R)(n (x) m) through the induced coaction",
            ok, wit)
    return rep


# -- mixed (H, A)-modules -------------------------------------------------------

class HAModule:
    """A carrier with a unital A-action, an A-coaction, and a left action of
    a YD module algebra H over the same A, tied by the mixed compatibility
    laws (verified by check_ha_module)."""

    def __init__(self, H, module, coaction, h_act_basis, r_act=None, name=None):
        self.H = H
        self.module = module
        self.coaction = coaction
        self.mha = module.mha
        self.field = module.field
        self._h_act = h_act_basis
        self._r_act = r_act
        self.name = name or module.name

    def h_act(self, h, m):
        out = Element(self.field)
        for hs, ch in h.terms.items():
            for ms, cm in m.terms.items():
                out = out + self._h_act(hs, ms).scaled(ch * cm)
        return out

    def r_act_formula(self, m, h):
        """m <- h = h_(0) -> (h_(1).m), h_(1) split against a local unit of
        m under the A-action."""
        mha = self.mha
        e = self.module.local_unit([m])
        out = Element(self.field)
        for s, c in self.H.coaction.slice_r(h, e).terms.items():
            h0, k = split_sym(s, self.H.module.arity)
            out = out + self.h_act(self.H.alg.el(h0),
                                   self.module.act(mha.el(k), m)).scaled(c)
        return out

    def r_act(self, m, h):
        if self._r_act is not None:
            return self._r_act(m, h)
        return self.r_act_formula(m, h)


def h_unit_ha_module(H, name=None):
    """M = H acting on itself by multiplication."""
    return HAModule(H, H.module, H.coaction,
                    lambda hs, ms: H.alg.mult(H.alg.el(hs), H.alg.el(ms)),
                    name=name or (H.name + ":unit-object"))


def mult_ha_module(H, name=None):
    """M = A with the counit action and trivial coaction, H acting by left
    multiplication inside A (H's carrier symbols must be A basis symbols)."""
    mha = H.mha
    mod = counit_module(mha)
    return HAModule(H, mod, trivial_coaction(mod),
                    lambda hs, ms: mha.algebra.mult(mha.algebra.el(hs),
                                                    mha.algebra.el(ms)),
                    name=name or (mha.name + ":mult-over-" + H.name))


def collapse_ha_module(H, yd, name=None):
    """H = K acting by scalars on a plain YD module: the mixed laws collapse
    to the YD laws."""
    if H.alg.basis != ["*"]:
        raise ValueError("collapse fixture needs the one-dimensional H")
    return HAModule(H, yd.module, yd.coaction,
                    lambda hs, ms: yd.module.el(ms),
                    name=name or (yd.name + ":collapse"))


def check_ha_module(M, samples=30, seed=0, suite="hq-monoidal"):
    """The left H-module law and both mixed compatibilities, plus the YD laws
    of the underlying A-structure when both slices are available."""
    mha = M.mha
    H = M.H
    rep = Report(suite, "%s/%s" % (mha.name, M.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)

    def rh():
        return _rand(rng, M.field, H.alg.basis)

    def rm():
        return random_mod_element(rng, M.module)

    def ra():
        return random_alg_element(rng, mha)

    ok, wit = True, None
    for _ in range(samples):
        h, hp, m = rh(), rh(), rm()
        if M.h_act(H.alg.mult(h, hp), m) != M.h_act(h, M.h_act(hp, m)):
            ok, wit = False, "h=%r h'=%r m=%r" % (h, hp, m)
            break
    rep.add("ha-left-module", "(hh') -> m = h -> (h' -> m)", ok, wit)

    ok, wit = True, None
    for _ in range(samples):
        a, h, m = ra(), rh(), rm()
        lhs = M.module.act(a, M.h_act(h, m))
        e = M.module.local_unit([m])
        rhs = Element(mha.field)
        for s, c in mha.delta_r(a, e).terms.items():
            p, q = legs(s)
            rhs = rhs + M.h_act(H.module.act(mha.el(p), h),
                                M.module.act(mha.el(q), m)).scaled(c)
        if lhs != rhs:
            ok, wit = False, "a=%r h=%r m=%r lhs=%r rhs=%r" % (a, h, m, lhs, rhs)
            break
    rep.add("ha-action-compat", "a.(h -> m) = (a_(1).h) -> (a_(2).m)", ok, wit)

    ok, wit = True, None
    for _ in range(samples):
        h, m, ap = rh(), rm(), ra()
        lhs = M.coaction.slice_r(M.h_act(h, m), ap)
        rhs = Element(mha.field)
        for s, c in H.coaction.slice_r(h, ap).terms.items():
            h0, k = split_sym(s, H.module.arity)
            for s2, c2 in M.coaction.slice_r(m, mha.el(k)).terms.items():
                m0, k2 = split_sym(s2, M.module.arity)
                rhs = rhs + tensor(M.h_act(H.alg.el(h0), M.module.el(m0)),
                                   mha.el(k2)).scaled(c * c2)
        if lhs != rhs:
            ok, wit = False, "h=%r m=%r a'=%r lhs=%r rhs=%r" % (h, m, ap, lhs, rhs)
            break
    rep.add("ha-coaction-compat",
            "rho(h -> m)(1 (x) a') = h_(0) -> m_(0) (x) m_(1) h_(1) a'",
            ok, wit)

    if M.coaction.has_slice_l:
        rep.laws.extend(check_yd(YDModule(M.module, M.coaction, name=M.name),
                                 samples, seed, suite).laws)
    return rep


def right_h_action(M, samples=20, seed=0):
    """The right action m <- h = h_(0) -> (h_(1).m); only defined over an
    A-commutative H (rejected otherwise with the failing pair)."""
    comm = check_a_commutative(M.H, samples, seed)
    if not comm.ok:
        raise ValueError("right action needs an A-commutative H: %s"
                         % comm.failures()[0].witness)
    return lambda m, h: M.r_act(m, h)


def check_h_bimodule(M, samples=40, seed=0, suite="hq-monoidal"):
    """m <- h together with -> makes M an H-bimodule: right-module law and
    the interchange law on samples."""
    mha = M.mha
    H = M.H
    rep = Report(suite, "%s/%s" % (mha.name, M.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)
    ok, wit = True, None
    ok2, wit2 = True, None
    for _ in range(samples):
        h = _rand(rng, M.field, H.alg.basis)
        hp = _rand(rng, M.field, H.alg.basis)
        m = random_mod_element(rng, M.module)
        if ok and M.r_act(m, H.alg.mult(h, hp)) != M.r_act(M.r_act(m, h), hp):
            ok, wit = False, "h=%r h'=%r m=%r" % (h, hp, m)
        if ok2 and M.r_act(M.h_act(h, m), hp) != M.h_act(h, M.r_act(m, hp)):
            ok2, wit2 = False, "h=%r h'=%r m=%r" % (h, hp, m)
        if not ok and not ok2:
            break
    rep.add("ha-right-module", "m <- (hh') = (m <- h) <- h'", ok, wit)
    rep.add("ha-bimodule-interchange", "(h -> m) <- h' = h -> (m <- h')",
            ok2, wit2)
    return rep


# -- the balanced tensor product -----------------------------------------------

class BalancedTensor:
    """M (x)_H N: the quotient of M (x) N by the balancing relators
    (m <- h) (x) n - m (x) (h -> n), carrying the diagonal A-action, the
    composite coaction m_(0) (x) n_(0) (x) n_(1) m_(1) a', and the H-actions
    h -> (m (x) n) = (h -> m) (x) n and (m (x) n) <- h = m (x) (n <- h)."""

    def __init__(self, M, N, name=None):
        if M.H is not N.H:
            raise ValueError("balanced tensor needs a common H")
        H = M.H
        if not H.alg.has_unit:
            raise ValueError("balanced tensor needs a unital H")
        if (M.module.basis is None or N.module.basis is None
                or H.alg.basis is None):
            raise ValueError("balanced tensor needs finite carriers")
        self.M, self.N, self.H = M, N, H
        self.mha = M.mha
        self.field = M.field
        self.am = M.module.arity
        self.an = N.module.arity
        self.arity = self.am + self.an
        self.name = name or ("%s(x)_H%s" % (M.name, N.name))
        ambient = [make_sym(legs(a) + legs(b))
                   for a in M.module.basis for b in N.module.basis]
        rels = []
        for ms in M.module.basis:
            for hs in H.alg.basis:
                for ns in N.module.basis:
                    r = (tensor(M.r_act(M.module.el(ms), H.alg.el(hs)),
                                N.module.el(ns))
                         - tensor(M.module.el(ms),
                                  N.h_act(H.alg.el(hs), N.module.el(ns))))
                    if not r.is_zero():
                        rels.append(r)
        self.relators = rels
        self.quot = QuotientSpace(ambient, rels)
        self.ham = self._descend()

    # structures on the ambient M (x) N
    def act_amb(self, a, x):
        out = Element(self.field)
        for s, c in x.terms.items():
            ms, ns = split_sym(s, self.am)
            n = self.N.module.el(ns)
            e = self.N.module.local_unit([n])
            for s2, c2 in self.mha.delta_r(a, e).terms.items():
                p, q = legs(s2)
                out = out + tensor(
                    self.M.module.act(self.mha.el(p), self.M.module.el(ms)),
                    self.N.module.act(self.mha.el(q), n)).scaled(c * c2)
        return out

    def slice_amb(self, x, ap):
        out = Element(self.field)
        for s, c in x.terms.items():
            ms, ns = split_sym(s, self.am)
            for s2, c2 in self.M.coaction.slice_r(self.M.module.el(ms),
                                                  ap).terms.items():
                m0, k = split_sym(s2, self.am)
                for s3, c3 in self.N.coaction.slice_r(
                        self.N.module.el(ns), self.mha.el(k)).terms.items():
                    n0, k2 = split_sym(s3, self.an)
                    out = out + tensor(
                        tensor(self.M.module.el(m0), self.N.module.el(n0)),
                        self.mha.el(k2)).scaled(c * c2 * c3)
        return out

    def slice_l_amb(self, x, a):
        out = Element(self.field)
        for s, c in x.terms.items():
            ms, ns = split_sym(s, self.am)
            for s2, c2 in self.N.coaction.slice_l(self.N.module.el(ns),
                                                  a).terms.items():
                n0, k = split_sym(s2, self.an)
                for s3, c3 in self.M.coaction.slice_l(
                        self.M.module.el(ms), self.mha.el(k)).terms.items():
                    m0, k2 = split_sym(s3, self.am)
                    out = out + tensor(
                        tensor(self.M.module.el(m0), self.N.module.el(n0)),
                        self.mha.el(k2)).scaled(c * c2 * c3)
        return out

    def h_amb(self, h, x):
        out = Element(self.field)
        for s, c in x.terms.items():
            ms, ns = split_sym(s, self.am)
            out = out + tensor(self.M.h_act(h, self.M.module.el(ms)),
                               self.N.module.el(ns)).scaled(c)
        return out

    def r_amb(self, x, h):
        out = Element(self.field)
        for s, c in x.terms.items():
            ms, ns = split_sym(s, self.am)
            out = out + tensor(self.M.module.el(ms),
                               self.N.r_act(self.N.module.el(ns), h)).scaled(c)
        return out

    def _descend(self):
        mha, q, field = self.mha, self.quot, self.field
        Mm, Nm = self.M.module, self.N.module
        soft = ("counit", "trivial")
        kind = "trivial" if (Mm.kind in soft and Nm.kind in soft) else "other"
        if mha.algebra.has_unit:
            lu = None
        else:
            def leg_elems(velems, side):
                out = []
                for x in velems:
                    for s in x.terms:
                        ms, ns = split_sym(s, self.am)
                        out.append(Mm.el(ms) if side == 0 else Nm.el(ns))
                return out

            if Mm.kind in soft:
                # the counit leg collapses, a right-leg local unit suffices
                lu = lambda velems, aelems: Nm.local_unit(
                    leg_elems(velems, 1), aelems)
            elif Nm.kind in soft:
                lu = lambda velems, aelems: Mm.local_unit(
                    leg_elems(velems, 0), aelems)
            else:
                raise ValueError("no local unit rule for %s" % self.name)
        mod = UnitalModule(
            mha,
            lambda asym, qsym: q.project(
                self.act_amb(mha.el(asym), Element.basis(field, qsym))),
            basis=q.basis, arity=self.arity, kind=kind, local_unit=lu,
            name=self.name)
        has_l = self.M.coaction.has_slice_l and self.N.coaction.has_slice_l
        coa = Coaction(
            mod,
            lambda qsym, asym: project_legs(
                q, self.slice_amb(Element.basis(field, qsym), mha.el(asym)),
                0, self.arity),
            (None if not has_l else
             lambda qsym, asym: project_legs(
                 q, self.slice_l_amb(Element.basis(field, qsym), mha.el(asym)),
                 0, self.arity)),
            name=self.name + ":coaction")
        return HAModule(
            self.H, mod, coa,
            lambda hsym, qsym: q.project(
                self.h_amb(self.H.alg.el(hsym), Element.basis(field, qsym))),
            r_act=lambda m, h: q.project(self.r_amb(q.section(m), h)),
            name=self.name)


def tensor_over_h(M, N, name=None):
    """The balanced tensor product as a mixed module (its carrier is the
    quotient basis)."""
    return BalancedTensor(M, N, name=name).ham


def check_balanced_tensor(T, samples=20, seed=0, suite="hq-monoidal"):
    """Relator stability of every descended structure (exact span-membership
    through the quotient projection), the mixed-module laws on the quotient,
    and agreement of the descended right action with the one recomputed from
    the quotient coaction."""
    mha = T.mha
    rep = Report(suite, "%s/%s" % (mha.name, T.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)
    rels = T.relators
    if len(rels) > 60:
        rels = rng.sample(rels, 60)

    def rh():
        return _rand(rng, T.field, T.H.alg.basis)

    ok_a, wit_a = True, None
    ok_h, wit_h = True, None
    ok_r, wit_r = True, None
    ok_c, wit_c = True, None
    for rel in rels:
        a = random_alg_element(rng, mha)
        h = rh()
        if ok_a and not T.quot.project(T.act_amb(a, rel)).is_zero():
            ok_a, wit_a = False, "a=%r rel=%r" % (a, rel)
        if ok_h and not T.quot.project(T.h_amb(h, rel)).is_zero():
            ok_h, wit_h = False, "h=%r rel=%r" % (h, rel)
        if ok_r and not T.quot.project(T.r_amb(rel, h)).is_zero():
            ok_r, wit_r = False, "h=%r rel=%r" % (h, rel)
        ap = random_alg_element(rng, mha)
        if ok_c and not project_legs(T.quot, T.slice_amb(rel, ap),
                                     0, T.arity).is_zero():
            ok_c, wit_c = False, "a'=%r rel=%r" % (ap, rel)
    rep.add("tensor-relator-action", "the diagonal A-action preserves the "
            "balancing relators", ok_a, wit_a)
    rep.add("tensor-relator-h-action", "h -> (.) preserves the balancing "
            "relators", ok_h, wit_h)
    rep.add("tensor-relator-r-action", "(.) <- h preserves the balancing "
            "relators", ok_r, wit_r)
    rep.add("tensor-relator-coaction", "the composite coaction preserves the "
            "balancing relators", ok_c, wit_c)

    rep.laws.extend(check_ha_module(T.ham, samples, seed, suite).laws)

    ok, wit = True, None
    for _ in range(samples):
        if not T.quot.basis:
            break
        m = _rand(rng, T.field, T.quot.basis)
        h = rh()
        if T.ham.r_act(m, h) != T.ham.r_act_formula(m, h):
            ok, wit = False, "m=%r h=%r" % (m, h)
            break
    rep.add("tensor-right-action",
            "(m (x) n) <- h = m (x) (n <- h) matches h_(0) -> (h_(1).(m (x) n))",
            ok, wit)
    return rep


def _image_rank(images, ambient_basis):
    nz = [im for im in images if not im.is_zero()]
    if not nz:
        return 0
    return QuotientSpace(ambient_basis, nz).rank


def check_unit_laws(M, samples=15, seed=0, suite="hq-monoidal"):
    """M (x)_H H = M = H (x)_H M: dimensions match and the canonical maps
    m (x) h -> m <- h and h (x) m -> h -> m kill the relators, are bijective,
    and intertwine all three structures."""
    mha = M.mha
    H = M.H
    rep = Report(suite, "%s/%s" % (mha.name, M.name), mha.field.name,
                 seed, samples)
    rng = random.Random(seed)
    RH = h_unit_ha_module(H)
    dim_m = len(M.module.basis)

    for side, T, mapper in [
            ("right", BalancedTensor(M, RH),
             lambda ms, hs: M.r_act(M.module.el(ms), H.alg.el(hs))),
            ("left", BalancedTensor(RH, M),
             lambda hs, ms: M.h_act(H.alg.el(hs), M.module.el(ms)))]:
        am = T.am

        def psi(x, _am=am, _mapper=mapper):
            out = Element(M.field)
            for s, c in x.terms.items():
                a, b = split_sym(s, _am)
                out = out + _mapper(a, b).scaled(c)
            return out

        rep.add("tensor-unit-dim-%s" % side,
                "dim(M (x)_H H) = dim(M) (%s unit law)" % side,
                len(T.quot.basis) == dim_m,
                None if len(T.quot.basis) == dim_m else
                "dim %d != %d" % (len(T.quot.basis), dim_m))
        ok = all(psi(rel).is_zero() for rel in T.relators)
        rep.add("tensor-unit-welldef-%s" % side,
                "the canonical unit map kills the balancing relators", ok,
                None if ok else "some relator has a nonzero image")
        images = [psi(T.quot.section(Element.basis(M.field, b)))
                  for b in T.quot.basis]
        rk = _image_rank(images, M.module.basis)
        rep.add("tensor-unit-bijective-%s" % side,
                "the canonical unit map is bijective",
                rk == len(T.quot.basis) == dim_m,
                None if rk == len(T.quot.basis) == dim_m else
                "image rank %d, dims %d/%d" % (rk, len(T.quot.basis), dim_m))

        ok, wit = True, None
        for _ in range(samples):
            if not T.quot.basis:
                break
            c = _rand(rng, M.field, T.quot.basis)
            a = random_alg_element(rng, mha)
            h = _rand(rng, M.field, H.alg.basis)
            sec = T.quot.section(c)
            if psi(T.quot.section(T.ham.module.act(a, c))) != M.module.act(a, psi(sec)):
                wit = "A-action at c=%r a=%r" % (c, a)
            elif psi(T.quot.section(T.ham.h_act(h, c))) != M.h_act(h, psi(sec)):
                wit = "H-action at c=%r h=%r" % (c, h)
            else:
                # coaction: map the carrier legs, keep the A-leg
                got = Element(M.field)
                for s, cc in T.ham.coaction.slice_r(c, a).terms.items():
                    head, tail = split_sym(s, T.arity)
                    img = psi(Element.basis(M.field, head))
                    for si, ci in img.terms.items():
                        got = got + Element.basis(
                            M.field, make_sym(legs(si) + legs(tail)),
                            cc * ci)
                if got != M.coaction.slice_r(psi(sec), a):
                    wit = "coaction at c=%r a=%r" % (c, a)
            if wit:
                ok = False
                break
        rep.add("tensor-unit-structure-%s" % side,
                "the canonical unit map intertwines action, H-action and "
                "coaction", ok, wit)
    return rep


def associator_maps(X, Y, Z):
    """The two iterated balanced tensors and the rebracketing maps between
    them, realized through projections of the flat X (x) Y (x) Z space."""
    TXY = BalancedTensor(X, Y)
    TL = BalancedTensor(TXY.ham, Z)
    TYZ = BalancedTensor(Y, Z)
    TR = BalancedTensor(X, TYZ.ham)
    ax, ay = X.module.arity, Y.module.arity
    az = Z.module.arity

    def to_l(flat):
        return TL.quot.project(project_legs(TXY.quot, flat, 0, ax + ay))

    def to_r(flat):
        return TR.quot.project(project_legs(TYZ.quot, flat, ax, ay + az))

    def phi(c):
        return to_r(TL.quot.section(c))

    def phi_inv(c):
        return to_l(TR.quot.section(c))

    return TL, TR, phi, phi_inv, to_l, to_r


def check_associator(X, Y, Z, samples=15, seed=0, suite="hq-monoidal"):
    """The rebracketing map is well-defined (it agrees with the flat
    projections on every representative), invertible, and linear over A and
    H on samples."""
    mha = X.mha
    rep = Report(suite, "%s/%s,%s,%s" % (mha.name, X.name, Y.name, Z.name),
                 mha.field.name, seed, samples)
    TL, TR, phi, phi_inv, to_l, to_r = associator_maps(X, Y, Z)
    rng = random.Random(seed)

    rep.add("assoc-dim", "both bracketings have the same dimension",
            len(TL.quot.basis) == len(TR.quot.basis),
            None if len(TL.quot.basis) == len(TR.quot.basis) else
            "%d != %d" % (len(TL.quot.basis), len(TR.quot.basis)))

    flats = [make_sym(legs(a) + legs(b) + legs(c))
             for a in X.module.basis for b in Y.module.basis
             for c in Z.module.basis]
    probe = flats if len(flats) <= 60 else rng.sample(flats, 60)
    ok, wit = True, None
    for t in probe:
        ft = Element.basis(mha.field, t)
        if phi(to_l(ft)) != to_r(ft) or phi_inv(to_r(ft)) != to_l(ft):
            ok, wit = False, "t=%r" % ft
            break
    rep.add("assoc-canonical", "the rebracketing map agrees with the flat "
            "projections on every representative", ok, wit)

    ok, wit = True, None
    for b in TL.quot.basis:
        c = Element.basis(mha.field, b)
        if phi_inv(phi(c)) != c:
            ok, wit = False, "left basis %r" % c
            break
    else:
        for b in TR.quot.basis:
            c = Element.basis(mha.field, b)
            if phi(phi_inv(c)) != c:
                ok, wit = False, "right basis %r" % c
                break
    rep.add("assoc-invertible", "the rebracketing map is invertible", ok, wit)

    ok, wit = True, None
    for _ in range(samples):
        if not TL.quot.basis:
            break
        c = _rand(rng, mha.field, TL.quot.basis)
        a = random_alg_element(rng, mha)
        h = _rand(rng, mha.field, X.H.alg.basis)
        if phi(TL.ham.module.act(a, c)) != TR.ham.module.act(a, phi(c)):
            ok, wit = False, "A-linearity at c=%r a=%r" % (c, a)
            break
        if phi(TL.ham.h_act(h, c)) != TR.ham.h_act(h, phi(c)):
            ok, wit = False, "H-linearity at c=%r h=%r" % (c, h)
            break
    rep.add("assoc-linear", "the rebracketing map is A-linear and H-linear",
            ok, wit)
    return rep


def check_pentagon(X, Y, Z, W, suite="hq-monoidal", seed=0):
    """Both composite rebracketing paths from (((X (x) Y) (x) Z) (x) W) to
    (X (x) (Y (x) (Z (x) W))) agree on every basis class."""
    mha = X.mha
    rep = Report(suite, "%s/%s,%s,%s,%s" % (mha.name, X.name, Y.name,
                                            Z.name, W.name),
                 mha.field.name, seed, 0)
    a1, a2 = X.module.arity, Y.module.arity
    a3, a4 = Z.module.arity, W.module.arity

    T12 = BalancedTensor(X, Y)
    T12_3 = BalancedTensor(T12.ham, Z)
    o1 = BalancedTensor(T12_3.ham, W)
    T34 = BalancedTensor(Z, W)
    o5 = BalancedTensor(T12.ham, T34.ham)
    T2_34 = BalancedTensor(Y, T34.ham)
    o4 = BalancedTensor(X, T2_34.ham)
    T23 = BalancedTensor(Y, Z)
    T1_23 = BalancedTensor(X, T23.ham)
    o2 = BalancedTensor(T1_23.ham, W)
    T23_4 = BalancedTensor(T23.ham, W)
    o3 = BalancedTensor(X, T23_4.ham)

    def to_o5(flat):
        x = project_legs(T12.quot, flat, 0, a1 + a2)
        x = project_legs(T34.quot, x, a1 + a2, a3 + a4)
        return o5.quot.project(x)

    def to_o4(flat):
        x = project_legs(T34.quot, flat, a1 + a2, a3 + a4)
        x = project_legs(T2_34.quot, x, a1, a2 + a3 + a4)
        return o4.quot.project(x)

    def to_o2(flat):
        x = project_legs(T23.quot, flat, a1, a2 + a3)
        x = project_legs(T1_23.quot, x, 0, a1 + a2 + a3)
        return o2.quot.project(x)

    def to_o3(flat):
        x = project_legs(T23.quot, flat, a1, a2 + a3)
        x = project_legs(T23_4.quot, x, a1, a2 + a3 + a4)
        return o3.quot.project(x)

    ok, wit = True, None
    for b in o1.quot.basis:
        flat = o1.quot.section(Element.basis(mha.field, b))
        path_a = to_o4(o5.quot.section(to_o5(flat)))
        path_b = to_o4(o3.quot.section(to_o3(o2.quot.section(to_o2(flat)))))
        if path_a != path_b:
            ok, wit = False, "class %r" % flat
            break
    rep.add("pentagon", "the two composite rebracketing paths agree",
            ok, wit)
    return rep


# -- suite drivers ---------------------------------------------------------------

def check_module_algebra_suite(mha, samples=30, seed=0, suite="module-algebra"):
    """Module-algebra, comodule-algebra, A-commutativity and joint YD-algebra
    laws over the standard fixtures available on an instance."""
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    _merge(rep, check_module_algebra(counit_module_algebra(mha),
                                     samples, seed, suite), "counit")
    if mha.cocommutative and _materialized(mha):
        _merge(rep, check_module_algebra(adjoint_module_algebra(mha),
                                         samples, seed, suite), "adjoint")

    carrier = counit_module(mha)
    _merge(rep, check_comodule_algebra(mha.algebra,
                                       coproduct_coaction(carrier),
                                       samples, seed, suite), "delta")
    _merge(rep, check_comodule_algebra(mha.algebra, trivial_coaction(carrier),
                                       samples, seed, suite), "trivial")

    k = trivial_yd_module_algebra(mha)
    _merge(rep, check_yd_module_algebra(k, samples, seed, suite), "K")
    _merge(rep, check_a_commutative(k, samples, seed, suite), "K")

    ct = counit_yd_module_algebra(mha)
    _merge(rep, check_yd_module_algebra(ct, samples, seed, suite),
           "counit-trivial")
    if mha.commutative:
        _merge(rep, check_a_commutative(ct, samples, seed, suite),
               "counit-trivial")
    if mha.cocommutative and _materialized(mha):
        _merge(rep, check_yd_module_algebra(
            adjoint_trivial_yd_module_algebra(mha), samples, seed, suite),
            "adjoint-trivial")
    if mha.cocommutative and _materialized(mha):
        _merge(rep, check_yd_module_algebra(canonical_yd_module_algebra(mha),
                                            samples, seed, suite),
               "adjoint-delta")
    return rep


def default_hq_fixtures(mha):
    """The mixed-module fixtures available on an instance: always the
    one-dimensional collapse, plus a cyclic-subalgebra battery on finite
    unital instances."""
    from .yd import trivial_yd
    out = []
    k = trivial_yd_module_algebra(mha)
    out.append(("K", k, [collapse_ha_module(k, trivial_yd(mha))]))
    syms = cyclic_subgroup_syms(mha.algebra)
    if syms is not None:
        sub = subgroup_yd_module_algebra(mha, syms)
        out.append(("sub", sub, [h_unit_ha_module(sub), mult_ha_module(sub)]))
    return out


def check_hq_monoidal(mha, samples=10, seed=0, suite="hq-monoidal"):
    """Mixed-module laws, bimodule laws, balanced tensor products with
    relator stability, unit laws, associator and one pentagon sample over
    the default fixtures."""
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    for tag, H, mods in default_hq_fixtures(mha):
        _merge(rep, check_yd_module_algebra(H, samples, seed, suite), tag)
        _merge(rep, check_a_commutative(H, samples, seed, suite), tag)
        for M in mods:
            mtag = "%s:%s" % (tag, M.name)
            _merge(rep, check_ha_module(M, samples, seed, suite), mtag)
            _merge(rep, check_h_bimodule(M, samples, seed, suite), mtag)
            if M.module.basis is not None:
                T = BalancedTensor(M, M)
                _merge(rep, check_balanced_tensor(T, samples, seed, suite),
                       mtag)
                _merge(rep, check_unit_laws(M, samples, seed, suite), mtag)
        small = min(mods, key=lambda m: len(m.module.basis or [0]))
        if small.module.basis is not None:
            _merge(rep, check_associator(mods[-1], small, small,
                                         samples, seed, suite), tag)
            _merge(rep, check_pentagon(small, small, small, small,
                                       suite=suite, seed=seed), tag)
    return rep
