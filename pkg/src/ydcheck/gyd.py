"""Twisted (alpha, beta)-Yetter-Drinfel'd modules and the braided T-category
they form: the twisted automorphism group, twisted tensor products, the
crossing functor, and the pair-graded braiding.

The compatibility law at a pair (alpha, beta), in Sweedler legs:

    (a.v)_(0) (x) (a.v)_(1) a'
        = a_(2).v_(0) (x) beta(a_(3)) v_(1) alpha(S^-1(a_(1))) a'

evaluated through the same twisted slice compositions as the untwisted case.
Only the right coaction slice is required of these modules.
"""

import random

from .linear import Element, Ten, tensor, legs
from .mha import random_alg_element
from .modules import (UnitalModule, Coaction, random_mod_element,
                      trivial_module, trivial_coaction, counit_module,
                      coproduct_coaction)
from .yd import compat_rhs, split_sym
from .instances import HopfAutomorphism, identity_automorphism


class AutoPair:
    """An element (alpha, beta) of the twisted square of the automorphism
    group, with product (a, b)#(c, d) = (ac, d c^-1 b c)."""

    def __init__(self, alpha, beta, name=None):
        if alpha.mha is not beta.mha:
            raise ValueError("automorphisms over different instances")
        self.alpha = alpha
        self.beta = beta
        self.mha = alpha.mha
        self.name = name or ("(%s,%s)" % (alpha.name, beta.name))

    def product(self, other):
        a, b = self.alpha, self.beta
        c, d = other.alpha, other.beta
        return AutoPair(a.composed(c),
                        d.composed(c.inverted()).composed(b).composed(c),
                        name="%s#%s" % (self.name, other.name))

    def inverse(self):
        a, b = self.alpha, self.beta
        return AutoPair(a.inverted(),
                        a.composed(b.inverted()).composed(a.inverted()),
                        name="%s^-1" % self.name)

    def agrees_with(self, other, probes):
        return all(self.alpha(x) == other.alpha(x)
                   and self.beta(x) == other.beta(x) for x in probes)

    def is_identity_on(self, probes):
        return (self.alpha.is_identity_on(probes)
                and self.beta.is_identity_on(probes))


def identity_pair(mha):
    i = identity_automorphism(mha)
    return AutoPair(i, i, name="(i,i)")


class GYDModule:
    """A unital module with a right-multiplier-valued coaction satisfying the
    twisted compatibility law at the attached pair."""

    def __init__(self, module, coaction, pair, name=None):
        if coaction.module is not module:
            raise ValueError("coaction built on a different module")
        self.module = module
        self.coaction = coaction
        self.pair = pair
        self.mha = module.mha
        self.field = module.field
        self.name = name or module.name


def check_gyd(gyd, samples=40, seed=0, suite="gyd"):
    """The twisted compatibility law on seeded samples."""
    from .report import Report
    mha = gyd.mha
    rep = Report(suite, "%s/%s@%s" % (mha.name, gyd.name, gyd.pair.name),
                 mha.field.name, seed, samples)
    rng = random.Random(seed)
    mod, coa = gyd.module, gyd.coaction
    ok, wit = True, None
    for _ in range(samples):
        a, ap = random_alg_element(rng, mha), random_alg_element(rng, mha)
        v = random_mod_element(rng, mod)
        lhs = coa.slice_r(mod.act(a, v), ap)
        rhs = compat_rhs(mod, coa, a, ap, v,
                         alpha=gyd.pair.alpha, beta=gyd.pair.beta)
        if lhs != rhs:
            ok, wit = False, "a=%r a'=%r v=%r lhs=%r rhs=%r" % (a, ap, v, lhs, rhs)
            break
    rep.add("gyd-compat",
            "(a.v)_(0) (x) (a.v)_(1)a' = "
            "a_(2).v_(0) (x) beta(a_(3))v_(1)alpha(S^-1(a_(1)))a'",
            ok, wit)
    return rep


# -- fixtures ------------------------------------------------------------------

def gyd_from_yd(V, name=None):
    """An untwisted YD module viewed at the identity pair."""
    return GYDModule(V.module, V.coaction, identity_pair(V.mha),
                     name=name or V.name)


def trivial_gyd(mha, aut=None, name=None):
    """The base field at a diagonal pair (sigma, sigma): the counit action
    absorbs the twist because beta(a_(2)) alpha(S^-1(a_(1))) collapses to
    eps(a) when alpha = beta."""
    pair = (identity_pair(mha) if aut is None
            else AutoPair(aut, aut, name="(%s,%s)" % (aut.name, aut.name)))
    mod = trivial_module(mha)
    return GYDModule(mod, trivial_coaction(mod), pair,
                     name=name or (mha.name + ":gyd-trivial@" + pair.name))


def counit_gyd(mha, aut=None, name=None):
    """A with the counit action and Gamma = Delta at a diagonal pair, on
    commutative instances."""
    if not mha.commutative:
        raise ValueError("the counit fixture needs a commutative instance")
    pair = (identity_pair(mha) if aut is None
            else AutoPair(aut, aut, name="(%s,%s)" % (aut.name, aut.name)))
    mod = counit_module(mha)
    return GYDModule(mod, coproduct_coaction(mod), pair,
                     name=name or (mod.name + ":gyd@" + pair.name))


def twisted_adjoint_gyd(mha, pair, name=None):
    """A acting on itself by a.v = beta(a_(2)) v alpha(S^-1(a_(1))) with
    Gamma = Delta, at the pair (alpha, beta); needs the materialized
    coproduct."""
    if mha._coproduct is None:
        raise ValueError("the twisted adjoint fixture needs a materialized "
                         "coproduct on %s" % mha.name)
    alg = mha.algebra
    alpha, beta = pair.alpha, pair.beta

    def act(a, v):
        out = Element(mha.field)
        for s, c in mha.coproduct(alg.el(a)).terms.items():
            a1, a2 = legs(s)
            out = out + alg.mult(
                alg.mult(beta(alg.el(a2)), alg.el(v)),
                alpha(mha.antipode_inv(alg.el(a1)))).scaled(c)
        return out

    mod = UnitalModule(mha, act, basis=alg.basis, kind="other",
                       name=(name or mha.name) + ":tw-adjoint@" + pair.name)
    return GYDModule(mod, coproduct_coaction(mod), pair,
                     name=mod.name)


def stretch_gyd(mha, name=None):
    """On the delta-function instance over the integers: the action
    a.delta_m = a(2m) delta_m with Gamma = Delta sits at the pair
    (negation, identity) -- a twisted fixture on a non-unital instance."""
    if mha.name != "fun-Z":
        raise ValueError("the stretch fixture is specific to fun-Z")
    alg = mha.algebra
    neg = None
    from .instances import group_map_automorphism, group_Z
    neg = group_map_automorphism(mha, group_Z(), lambda n: -n, lambda n: -n,
                                 name="neg")
    pair = AutoPair(neg, identity_automorphism(mha), name="(neg,id)")

    def act(a, v):
        return alg.el(v, alg.el(a).coeff(2 * v))

    def lu(velems, aelems):
        doubled = [alg.el(2 * s) for x in velems for s in x.terms]
        return alg.local_unit(doubled + list(aelems))

    mod = UnitalModule(mha, act, basis=None, sample_basis=alg._sample_basis,
                       local_unit=lu, kind="other",
                       name=(name or mha.name) + ":stretch")
    coa = Coaction(mod, lambda v, a: mha.delta_r(alg.el(v), alg.el(a)),
                   name=mod.name + ":delta")
    return GYDModule(mod, coa, pair, name=mod.name)


# -- twisted tensor product ----------------------------------------------------

def gyd_tensor(V, W, name=None):
    """V@(a,b) tensor W@(c,d), landing at the pair product: action
    c(x_(1)).v (x) c^-1 b c(x_(2)).w and coaction second leg w_(1)v_(1)a'."""
    mha = V.mha
    alg = mha.algebra
    gamma = W.pair.alpha
    theta = gamma.inverted().composed(V.pair.beta).composed(gamma)
    Vm, Wm = V.module, W.module
    va = Vm.arity

    def act(asym, tsym):
        vs, ws = split_sym(tsym, va)
        e = theta.inverse(Wm.local_unit([Wm.el(ws)]))
        out = Element(mha.field)
        for s, c in mha.delta_r(alg.el(asym), e).terms.items():
            p, q = legs(s)
            out = out + tensor(Vm.act(gamma(alg.el(p)), Vm.el(vs)),
                               Wm.act(theta(alg.el(q)), Wm.el(ws))).scaled(c)
        return out

    basis = None
    if Vm.basis is not None and Wm.basis is not None:
        basis = [Ten(legs(v) + legs(w)) for v in Vm.basis for w in Wm.basis]

    def sample(rng):
        return tensor(Vm.el(Vm.sample_basis(rng)),
                      Wm.el(Wm.sample_basis(rng))).support()[0]

    def leg_elems(velems, side):
        out = []
        for x in velems:
            for s in x.terms:
                vs, ws = split_sym(s, va)
                out.append(Vm.el(vs) if side == 0 else Wm.el(ws))
        return out

    if alg.has_unit:
        lu = lambda velems, aelems: alg.unit
    elif Vm.kind in ("counit", "trivial"):
        # the first leg collapses through the counit (eps o gamma = eps)
        def lu(velems, aelems):
            base = theta.inverse(Wm.local_unit(leg_elems(velems, 1), ()))
            return alg.local_unit([base] + list(aelems))
    elif Wm.kind in ("counit", "trivial"):
        def lu(velems, aelems):
            base = gamma.inverse(Vm.local_unit(leg_elems(velems, 0), ()))
            return alg.local_unit([base] + list(aelems))
    else:
        raise ValueError("no twisted diagonal local unit rule for %s (x) %s"
                         % (Vm.name, Wm.name))

    mod = UnitalModule(mha, act, basis=basis, sample_basis=sample,
                       local_unit=lu, kind="tensor", arity=va + Wm.arity,
                       name=name or ("%s(x)%s" % (V.name, W.name)))

    ca_v, ca_w = V.coaction, W.coaction

    def slice_r(tsym, asym):
        vs, ws = split_sym(tsym, va)
        x = ca_v.slice_r(Vm.el(vs), mha.el(asym))  # v0 (x) v1 a'
        out = Element(mha.field)
        for s, c in x.terms.items():
            v0, m = split_sym(s, va)
            y = ca_w.slice_r(Wm.el(ws), mha.el(m))  # w0 (x) w1 v1 a'
            for s2, c2 in y.terms.items():
                w0, m2 = split_sym(s2, Wm.arity)
                out = out + tensor(tensor(Vm.el(v0), Wm.el(w0)),
                                   mha.el(m2)).scaled(c * c2)
        return out

    coa = Coaction(mod, slice_r, name=mod.name + ":coact")
    return GYDModule(mod, coa, V.pair.product(W.pair), name=mod.name)


# -- the crossing functor -------------------------------------------------------

def crossed_functor(p, W, name=None):
    """phi_p(W) for p = (alpha, beta) and W at (gamma, delta): same carrier,
    action a -> gamma^-1 beta gamma alpha^-1(a). and coaction
    w_(0) (x) alpha beta^-1(w_(1)) a', landing at p # (gamma, delta) # p^-1.
    The functor is the identity on morphisms."""
    mha = W.mha
    alg = mha.algebra
    alpha, beta = p.alpha, p.beta
    gamma = W.pair.alpha
    theta = (gamma.inverted().composed(beta).composed(gamma)
             .composed(alpha.inverted()))
    coat = alpha.composed(beta.inverted())  # applied to the coaction A-leg
    Wm = W.module

    def act(asym, wsym):
        return Wm.act(theta(alg.el(asym)), Wm.el(wsym))

    def lu(velems, aelems):
        if alg.has_unit:
            return alg.unit
        base = theta.inverse(Wm.local_unit(velems, ()))
        return alg.local_unit([base] + list(aelems))

    kind = Wm.kind if Wm.kind in ("counit", "trivial") else "other"
    mod = UnitalModule(mha, act, basis=Wm.basis, sample_basis=Wm.sample_basis,
                       local_unit=lu, kind=kind, arity=Wm.arity,
                       name=name or ("%s>%s" % (p.name, W.name)))

    def slice_r(wsym, asym):
        # Gamma(w)(1 (x) a') = w0 (x) coat(w1) a': slice against
        # coat^-1(e) for e a left local unit of a', then retwist
        ap = alg.el(asym)
        e = alg.local_unit([ap])
        x = W.coaction.slice_r(Wm.el(wsym), coat.inverse(e))
        out = Element(mha.field)
        for s, c in x.terms.items():
            w0, m = split_sym(s, Wm.arity)
            out = out + tensor(Wm.el(w0),
                               alg.mult(coat(alg.el(m)), ap)).scaled(c)
        return out

    coa = Coaction(mod, slice_r, name=mod.name + ":coact")
    target = p.product(W.pair).product(p.inverse())
    return GYDModule(mod, coa, target, name=mod.name)


# -- the graded braiding ---------------------------------------------------------

def gyd_braiding(V, W, vw):
    """C_{V,W}(v (x) w) = w_(0) (x) beta^-1(w_(1)).v into phi_V(W) (x) V,
    with beta from V's pair; the acting leg is produced against a
    beta-twisted local unit of v."""
    mha = V.mha
    beta = V.pair.beta
    Vm, Wm = V.module, W.module
    out = Element(mha.field)
    for s, c in vw.terms.items():
        vs, ws = split_sym(s, Vm.arity)
        v = Vm.el(vs)
        e = Vm.local_unit([v])
        x = W.coaction.slice_r(Wm.el(ws), beta(e))
        for s2, c2 in x.terms.items():
            w0, m = split_sym(s2, Wm.arity)
            out = out + tensor(Wm.el(w0),
                               Vm.act(beta.inverse(mha.el(m)), v)).scaled(c * c2)
    return out


def gyd_braiding_inv(V, W, wv, max_rounds=4):
    """C^-1(w (x) v) = beta^-1(S(w_(1))).v (x) w_(0), solved with S and beta
    and certified by stabilization: the acting leg is produced against
    S^-1(beta(e)) where e is a module local unit fixing both v and the
    previous round's output legs."""
    mha = V.mha
    alg = mha.algebra
    beta = V.pair.beta
    Vm, Wm = V.module, W.module

    def attempt(extra):
        out = Element(mha.field)
        for s, c in wv.terms.items():
            ws, vs = split_sym(s, Wm.arity)
            v = Vm.el(vs)
            e = Vm.local_unit([v] + extra)
            x = W.coaction.slice_r(Wm.el(ws), mha.antipode_inv(beta(e)))
            for s2, c2 in x.terms.items():
                w0, m = split_sym(s2, Wm.arity)
                out = out + tensor(
                    Vm.act(beta.inverse(mha.antipode(alg.el(m))), v),
                    Wm.el(w0)).scaled(c * c2)
        return out

    prev = attempt([])
    for _ in range(max_rounds):
        extra = [Vm.el(split_sym(s, Vm.arity)[0]) for s in prev.terms]
        cur = attempt(extra)
        if cur == prev:
            return cur
        prev = cur
    raise ValueError("braiding inverse did not stabilize on %s (x) %s"
                     % (W.name, V.name))


# -- the T-category suite ---------------------------------------------------------

def _probes(mha, rng, n=12):
    return [random_alg_element(rng, mha) for _ in range(n)]


def gyd_fixtures_at(mha, pair):
    """Fixtures living exactly at the given pair."""
    out = []
    rng = random.Random(1)
    probes = _probes(mha, rng, 8)
    diagonal = all(pair.alpha(x) == pair.beta(x) for x in probes)
    if diagonal:
        out.append(trivial_gyd(mha, pair.alpha))
        if mha.commutative:
            out.append(counit_gyd(mha, pair.alpha))
    if mha._coproduct is not None:
        out.append(twisted_adjoint_gyd(mha, pair))
    if not out:
        raise ValueError("no fixture available at pair %s on %s"
                         % (pair.name, mha.name))
    return out


def check_t_category(mha, pairs, samples=30, seed=0, suite="t-category"):
    """The graded-category laws over the given automorphism pairs: the
    twisted group structure, compatibility of every constructed object at
    its declared pair, functoriality and monoidality of the crossing, and
    A-linearity, invertibility, naturality and crossing-compatibility of
    the braiding."""
    from .report import Report
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    rng = random.Random(seed)
    alg = mha.algebra
    probes = _probes(mha, rng)
    pairs = list(pairs)
    idp = identity_pair(mha)

    # group laws of the twisted square
    ok, wit = True, None
    for p in pairs:
        for q in pairs:
            for r in pairs:
                lhs, rhs = p.product(q).product(r), p.product(q.product(r))
                if not lhs.agrees_with(rhs, probes):
                    ok, wit = False, "pairs %s,%s,%s" % (p.name, q.name, r.name)
    rep.add("pair-assoc", "(p#q)#r = p#(q#r)", ok, wit)
    ok, wit = True, None
    for p in pairs:
        if not (p.product(p.inverse()).is_identity_on(probes)
                and p.inverse().product(p).is_identity_on(probes)
                and idp.product(p).agrees_with(p, probes)
                and p.product(idp).agrees_with(p, probes)):
            ok, wit = False, "pair %s" % p.name
    rep.add("pair-inverse-unit", "p#p^-1 = p^-1#p = (i,i); (i,i) is a unit", ok, wit)

    fixtures = []
    for p in pairs:
        fixtures.extend(gyd_fixtures_at(mha, p))

    for V in fixtures:
        sub = check_gyd(V, samples=samples, seed=seed, suite=suite)
        for law in sub.laws:
            rep.add("%s[%s]" % (law.law, V.name), law.statement, law.ok, law.witness)

    # tensor lands at the product pair
    for i, V in enumerate(fixtures):
        W = fixtures[(i + 1) % len(fixtures)]
        try:
            T = gyd_tensor(V, W)
        except ValueError as exc:
            rep.add("tensor-pair[%s,%s]" % (V.name, W.name),
                    "V (x) W passes at the product pair", False, str(exc))
            continue
        sub = check_gyd(T, samples=max(4, samples // 3), seed=seed, suite=suite)
        rep.add("tensor-pair[%s,%s]" % (V.name, W.name),
                "V (x) W passes at the product pair",
                sub.ok, None if sub.ok else sub.failures()[0].witness)

    # crossing lands at the conjugated pair; identity pair is inert
    for p in pairs:
        for W in fixtures[:3]:
            C = crossed_functor(p, W)
            sub = check_gyd(C, samples=max(4, samples // 3), seed=seed, suite=suite)
            rep.add("crossed-pair[%s>%s]" % (p.name, W.name),
                    "phi_p(W) passes at p # pair(W) # p^-1",
                    sub.ok, None if sub.ok else sub.failures()[0].witness)

    W0 = fixtures[-1]
    C0 = crossed_functor(idp, W0)
    ok, wit = True, None
    for _ in range(samples):
        a = random_alg_element(rng, mha)
        w = random_mod_element(rng, W0.module)
        if C0.module.act(a, w) != W0.module.act(a, w):
            ok, wit = False, "action differs at a=%r w=%r" % (a, w)
            break
        if C0.coaction.slice_r(w, a) != W0.coaction.slice_r(w, a):
            ok, wit = False, "coaction differs at a=%r w=%r" % (a, w)
            break
    rep.add("crossed-identity", "phi_(i,i) leaves objects unchanged", ok, wit)

    # functoriality on sampled elements
    if len(pairs) >= 2:
        p, q = pairs[0], pairs[1]
        lhs = crossed_functor(p, crossed_functor(q, W0))
        rhs = crossed_functor(p.product(q), W0)
        ok, wit = True, None
        for _ in range(samples):
            a = random_alg_element(rng, mha)
            w = random_mod_element(rng, W0.module)
            if lhs.module.act(a, w) != rhs.module.act(a, w):
                ok, wit = False, "action differs at a=%r w=%r" % (a, w)
                break
            if lhs.coaction.slice_r(w, a) != rhs.coaction.slice_r(w, a):
                ok, wit = False, "coaction differs at a=%r w=%r" % (a, w)
                break
        rep.add("crossed-functorial", "phi_p o phi_q = phi_(p#q) on samples", ok, wit)

    # monoidality of the crossing on one sampled pair of objects
    V, W = fixtures[0], fixtures[-1]
    p = pairs[-1]
    try:
        lhs = crossed_functor(p, gyd_tensor(V, W))
        rhs = gyd_tensor(crossed_functor(p, V), crossed_functor(p, W))
        ok, wit = True, None
        for _ in range(samples):
            a = random_alg_element(rng, mha)
            t = tensor(random_mod_element(rng, V.module),
                       random_mod_element(rng, W.module))
            la = sum((lhs.module.act(a, lhs.module.el(s)).scaled(c)
                      for s, c in t.terms.items()), Element(mha.field))
            ra = sum((rhs.module.act(a, rhs.module.el(s)).scaled(c)
                      for s, c in t.terms.items()), Element(mha.field))
            if la != ra:
                ok, wit = False, "action differs at a=%r t=%r" % (a, t)
                break
            ls = sum((lhs.coaction.slice_r(lhs.module.el(s), a).scaled(c)
                      for s, c in t.terms.items()), Element(mha.field))
            rs = sum((rhs.coaction.slice_r(rhs.module.el(s), a).scaled(c)
                      for s, c in t.terms.items()), Element(mha.field))
            if ls != rs:
                ok, wit = False, "coaction differs at a=%r t=%r" % (a, t)
                break
        rep.add("crossed-monoidal",
                "phi_p(V (x) W) = phi_p(V) (x) phi_p(W) on samples", ok, wit)
    except ValueError as exc:
        rep.add("crossed-monoidal",
                "phi_p(V (x) W) = phi_p(V) (x) phi_p(W) on samples", False, str(exc))

    # braiding: A-linearity, round trips, naturality, crossing compatibility
    for i, V in enumerate(fixtures):
        W = fixtures[(i + 1) % len(fixtures)]
        name = "%s,%s" % (V.name, W.name)
        try:
            src = gyd_tensor(V, W)
            tgt = gyd_tensor(crossed_functor(V.pair, W), V)
        except ValueError as exc:
            rep.add("braiding-linear[%s]" % name, "C is A-linear", False, str(exc))
            continue

        ok, wit = True, None
        ok2, wit2 = True, None
        ok3, wit3 = True, None
        two = mha.field.from_int(2)
        for _ in range(samples):
            a = random_alg_element(rng, mha)
            v = random_mod_element(rng, V.module)
            w = random_mod_element(rng, W.module)
            t = tensor(v, w)
            if ok:
                at = sum((src.module.act(a, src.module.el(s)).scaled(c)
                          for s, c in t.terms.items()), Element(mha.field))
                lhs = gyd_braiding(V, W, at)
                ct = gyd_braiding(V, W, t)
                rhs = sum((tgt.module.act(a, tgt.module.el(s)).scaled(c)
                           for s, c in ct.terms.items()), Element(mha.field))
                if lhs != rhs:
                    ok, wit = False, "a=%r v=%r w=%r lhs=%r rhs=%r" % (a, v, w, lhs, rhs)
            if ok2:
                fwd = gyd_braiding(V, W, t)
                if gyd_braiding_inv(V, W, fwd) != t:
                    ok2, wit2 = False, "v(x)w=%r" % t
            if ok3:
                # naturality under the scalar morphism w -> 2w on W
                if (gyd_braiding(V, W, tensor(v, w.scaled(two)))
                        != gyd_braiding(V, W, t).scaled(two)):
                    ok3, wit3 = False, "v=%r w=%r" % (v, w)
        rep.add("braiding-linear[%s]" % name,
                "C(a.(v (x) w)) = a.C(v (x) w)", ok, wit)
        rep.add("braiding-invertible[%s]" % name,
                "C^-1 o C = id, inverse solved with S and beta", ok2, wit2)
        rep.add("braiding-natural[%s]" % name,
                "C transports the scalar morphism on W", ok3, wit3)

    # crossing the braiding: phi_p(C_{V,W}) = C_{phi_p V, phi_p W}
    V, W = fixtures[0], fixtures[-1]
    p = pairs[0]
    pV, pW = crossed_functor(p, V), crossed_functor(p, W)
    ok, wit = True, None
    for _ in range(samples):
        v = random_mod_element(rng, V.module)
        w = random_mod_element(rng, W.module)
        t = tensor(v, w)
        if gyd_braiding(V, W, t) != gyd_braiding(pV, pW, t):
            ok, wit = False, "v=%r w=%r" % (v, w)
            break
    rep.add("braiding-crossing",
            "the braiding commutes with the crossing on samples", ok, wit)
    return rep
