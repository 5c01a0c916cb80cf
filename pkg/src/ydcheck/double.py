"""Diagonal crossed products of a finite-dimensional unital instance with its
dual, Drinfel'd doubles, the correspondence between twisted Yetter-Drinfel'd
modules and modules over the crossed product, and smash products.

Multiplication in the crossed product, for p, p' in the dual and a, a' in
the base at a pair (alpha, beta):

    (p >< a)(p' >< a')
        = p (alpha(a_(1)) |> p' <| S^-1(beta(a_(3)))) >< a_(2) a'

with the coregular actions (a |> p)(x) = p(xa) and (p <| a)(x) = p(ax).
The source material leaves the orientation of |>/<| to an external
convention, so the constructor supports the mirrored assignment as well and
the correspondence checks certify which one closes the round trips.
"""

import random

from .linear import Element, Ten, tensor, legs, make_sym, sym_str
from .mha import Algebra, random_alg_element
from .modules import UnitalModule, Coaction, random_mod_element
from .yd import split_sym
from .gyd import GYDModule, AutoPair, identity_pair
from .instances import dual_hopf, dual_sym, compute_integrals


class DiagonalCrossedProduct:
    """The crossed-product algebra on basis symbols (p_s >< t), together
    with the coalgebra structure used by smash products."""

    def __init__(self, base, pair=None, convention="standard", name=None):
        if base.algebra.basis is None or not base.algebra.has_unit:
            raise ValueError("the crossed product needs a finite-dimensional "
                             "unital instance")
        if convention not in ("standard", "mirrored"):
            raise ValueError("unknown coregular convention %r" % convention)
        self.base = base
        self.dual = dual_hopf(base)
        self.pair = pair if pair is not None else identity_pair(base)
        self.convention = convention
        self.field = base.field
        self.name = name or ("%s><%s@%s" % (self.dual.name, base.name,
                                            self.pair.name))
        alpha, beta = self.pair.alpha, self.pair.beta
        dual, field = self.dual, self.field

        def cop2(a):
            """a_(1) (x) a_(2) (x) a_(3), materialized."""
            out = Element(field)
            for s, c in base.coproduct(a).terms.items():
                l1, l2 = legs(s)
                for s2, c2 in base.coproduct(base.el(l2)).terms.items():
                    out = out + Element.basis(field,
                                              Ten((l1,) + legs(s2)),
                                              c * c2)
            return out

        def bracket(a1, q, a3):
            """alpha(a1) |> q <| S^-1(beta(a3)) under the active convention."""
            left = alpha(base.el(a1))
            right = base.antipode_inv(beta(base.el(a3)))
            if convention == "standard":
                return dual.act_right(dual.act_left(left, q), right)
            return dual.act_left(right, dual.act_right(q, left))

        def mult_basis(s1, s2):
            p, a = legs(s1)
            q, b = legs(s2)
            out = Element(field)
            for s, c in cop2(base.el(a)).terms.items():
                a1, a2, a3 = legs(s)
                mid = bracket(a1, dual.el(q), a3)
                dpart = dual.algebra.mult(dual.el(p), mid)
                apart = base.algebra.mult(base.el(a2), base.el(b))
                out = out + tensor(dpart, apart).scaled(c)
            return out

        basis = [Ten((dual_sym(s), t)) for s in base.algebra.basis
                 for t in base.algebra.basis]
        unit = tensor(dual.algebra.unit, base.algebra.unit)
        self.algebra = Algebra(field, mult_basis, basis=basis, unit=unit,
                               name=self.name)

    def element(self, p, a):
        """p >< a for p in the dual and a in the base (Elements)."""
        return tensor(p, a)

    def counit(self, d):
        """eps(p >< a) = p(1) eps(a)."""
        out = self.field.zero()
        for s, c in d.terms.items():
            p, a = legs(s)
            out = out + (c * self.dual.counit(self.dual.el(p))
                         * self.base.counit(self.base.el(a)))
        return out

    def coproduct(self, d):
        """Delta(p >< a) = (p_(2) >< a_(1)) (x) (p_(1) >< a_(2)): the dual
        leg carries the opposite coproduct."""
        out = Element(self.field)
        for s, c in d.terms.items():
            p, a = legs(s)
            for sp, cp in self.dual.coproduct(self.dual.el(p)).terms.items():
                p1, p2 = legs(sp)
                for sa, ca in self.base.coproduct(self.base.el(a)).terms.items():
                    a1, a2 = legs(sa)
                    out = out + Element.basis(
                        self.field, Ten((Ten((p2, a1)), Ten((p1, a2)))),
                        c * cp * ca)
        return out

    def structure_constants(self):
        """The full multiplication table, JSON-ready and deterministic."""
        labels = [sym_str(s) for s in self.algebra.basis]
        table = []
        index = {s: i for i, s in enumerate(self.algebra.basis)}
        for i, s1 in enumerate(self.algebra.basis):
            for j, s2 in enumerate(self.algebra.basis):
                prod = self.algebra.mult(self.algebra.el(s1),
                                         self.algebra.el(s2))
                entries = sorted((index[s], str(c))
                                 for s, c in prod.terms.items())
                if entries:
                    table.append([i, j, [[k, c] for k, c in entries]])
        return {"name": self.name, "convention": self.convention,
                "basis": labels, "table": table}


def drinfeld_double(base, convention="standard", name=None):
    """The crossed product at the identity pair."""
    return DiagonalCrossedProduct(base, identity_pair(base),
                                  convention=convention,
                                  name=name or ("D(%s)" % base.name))


def check_dcp(dcp, samples=500, seed=0, suite="dcp"):
    """Associativity (exhaustive on small bases, sampled otherwise) and the
    unit law."""
    from .report import Report
    alg = dcp.algebra
    n = len(dcp.base.algebra.basis)
    rep = Report(suite, dcp.name, dcp.field.name, seed, samples)
    rng = random.Random(seed)

    if n <= 4:
        triples = [(x, y, z) for x in alg.basis for y in alg.basis
                   for z in alg.basis]
        mode = "exhaustive over %d basis triples" % len(triples)
    else:
        triples = [(alg.basis[rng.randrange(len(alg.basis))],
                    alg.basis[rng.randrange(len(alg.basis))],
                    alg.basis[rng.randrange(len(alg.basis))])
                   for _ in range(samples)]
        mode = "sampled over %d basis triples" % len(triples)
    ok, wit = True, None
    for x, y, z in triples:
        ex, ey, ez = alg.el(x), alg.el(y), alg.el(z)
        if alg.mult(alg.mult(ex, ey), ez) != alg.mult(ex, alg.mult(ey, ez)):
            ok, wit = False, "x=%r y=%r z=%r" % (x, y, z)
            break
    rep.add("dcp-assoc", "(xy)z = x(yz), " + mode, ok, wit)

    ok, wit = True, None
    for x in alg.basis:
        ex = alg.el(x)
        if alg.mult(alg.unit, ex) != ex or alg.mult(ex, alg.unit) != ex:
            ok, wit = False, "x=%r" % (x,)
            break
    rep.add("dcp-unit", "eps >< 1 is a two-sided unit", ok, wit)
    return rep


# -- modules over the crossed product -------------------------------------------

class DcpModule:
    """A left module over a crossed product, given by its action on basis
    symbols of both sides."""

    def __init__(self, dcp, act_basis, basis, name=None):
        self.dcp = dcp
        self.field = dcp.field
        self._act_basis = act_basis  # (dcp basis sym, carrier sym) -> Element
        self.basis = basis
        self.name = name or "dcp-module"

    def el(self, sym, coeff=None):
        return Element.basis(self.field, sym, coeff)

    def act(self, d, m):
        out = Element(self.field)
        for sd, cd in d.terms.items():
            for sm, cm in m.terms.items():
                out = out + self._act_basis(sd, sm).scaled(cd * cm)
        return out


def check_dcp_module(M, samples=60, seed=0, suite="dcp"):
    """Module associativity and the unit law over the crossed product."""
    from .report import Report
    dcp = M.dcp
    alg = dcp.algebra
    rep = Report(suite, "%s/%s" % (dcp.name, M.name), dcp.field.name, seed, samples)
    rng = random.Random(seed)

    def rd():
        return alg.el(alg.basis[rng.randrange(len(alg.basis))])

    def rm():
        return M.el(M.basis[rng.randrange(len(M.basis))])

    ok, wit = True, None
    for _ in range(samples):
        d, dp, m = rd(), rd(), rm()
        if M.act(alg.mult(d, dp), m) != M.act(d, M.act(dp, m)):
            ok, wit = False, "d=%r d'=%r m=%r" % (d, dp, m)
            break
    rep.add("dcp-module-assoc", "(dd').m = d.(d'.m)", ok, wit)
    ok, wit = True, None
    for s in M.basis:
        if M.act(alg.unit, M.el(s)) != M.el(s):
            ok, wit = False, "m=%r" % (s,)
            break
    rep.add("dcp-module-unit", "(eps >< 1).m = m", ok, wit)
    return rep


def regular_dcp_module(dcp, name=None):
    """The crossed product acting on itself by left multiplication."""
    return DcpModule(dcp,
                     lambda d, m: dcp.algebra.mult(dcp.algebra.el(d),
                                                   dcp.algebra.el(m)),
                     dcp.algebra.basis,
                     name=name or (dcp.name + ":regular"))


def yd_to_dcp_module(V, dcp=None):
    """A twisted YD module as a module over the crossed product:
    (p >< a).m = p((a.m)_(1)) (a.m)_(0)."""
    base = V.mha
    if dcp is None:
        dcp = DiagonalCrossedProduct(base, V.pair)
    dual = dcp.dual
    if V.module.basis is None:
        raise ValueError("the correspondence needs a finite-dimensional carrier")

    def act_basis(dsym, msym):
        p, a = legs(dsym)
        am = V.module.act(base.el(a), V.module.el(msym))
        out = Element(base.field)
        for s, c in am.terms.items():
            gm = V.coaction.slice_r(V.module.el(s), base.algebra.unit)
            for s2, c2 in gm.terms.items():
                m0, m1 = split_sym(s2, V.module.arity)
                out = out + V.module.el(m0).scaled(
                    c * c2 * dual.pairing(dual.el(p), base.el(m1)))
        return out

    return DcpModule(dcp, act_basis, V.module.basis,
                     name=V.name + ":as-dcp-module")


def dcp_module_to_yd(M, integrals=None, name=None):
    """A module over the crossed product as a twisted YD module:
    a.m = (eps >< a).m and the coaction
    m_(0) (x) m_(1) = (phi(. t_(2)) >< 1).m (x) S^-1(t_(1))."""
    dcp = M.dcp
    base = dcp.base
    dual = dcp.dual
    field = dcp.field
    if integrals is None:
        integrals = compute_integrals(base)

    def act_basis(asym, msym):
        d = tensor(dual.algebra.unit, base.el(asym))
        return M.act(d, M.el(msym))

    # carrier symbols may themselves be tensors (e.g. the regular module of
    # the crossed product); track their leg count so slices split correctly
    ar = len(legs(M.basis[0]))
    mod = UnitalModule(base, act_basis, basis=M.basis, kind="other", arity=ar,
                       name=(name or M.name) + ":as-yd")

    # materialize the coaction once per carrier basis symbol
    cop_t = base.coproduct(integrals.t)
    coact = {}
    for msym in M.basis:
        out = Element(field)
        for s, c in cop_t.terms.items():
            t1, t2 = legs(s)
            # phi(. t_(2)) as a dual element
            p = Element(field)
            for b in base.algebra.basis:
                cc = integrals.phi(base.algebra.mult(base.el(b), base.el(t2)))
                if cc != field.zero():
                    p = p + Element.basis(field, dual_sym(b), cc)
            moved = M.act(tensor(p, base.algebra.unit), M.el(msym))
            st1 = base.antipode_inv(base.el(t1))
            for s2, c2 in moved.terms.items():
                out = out + tensor(M.el(s2), st1.scaled(c * c2))
        coact[msym] = out

    def slice_r(msym, asym):
        out = Element(field)
        for s, c in coact[msym].terms.items():
            m0, m1 = split_sym(s, ar)
            out = out + tensor(mod.el(m0),
                               base.algebra.mult(base.el(m1),
                                                 base.el(asym))).scaled(c)
        return out

    coa = Coaction(mod, slice_r, name=mod.name + ":coact")
    return GYDModule(mod, coa, dcp.pair, name=mod.name)


def check_double_correspondence(mha, gyds, samples=40, seed=0,
                                suite="double-correspondence"):
    """Both round trips of the correspondence, module validity of the
    forward image, and GYD validity of the backward image (including the
    regular crossed-product module)."""
    from .report import Report
    from .gyd import check_gyd
    rep = Report(suite, mha.name, mha.field.name, seed, samples)
    rng = random.Random(seed)
    integrals = compute_integrals(mha)

    for V in gyds:
        dcp = DiagonalCrossedProduct(mha, V.pair)
        M = yd_to_dcp_module(V, dcp)
        sub = check_dcp_module(M, samples=samples, seed=seed, suite=suite)
        for law in sub.laws:
            rep.add("%s[%s]" % (law.law, V.name), law.statement, law.ok, law.witness)

        back = dcp_module_to_yd(M, integrals)
        ok, wit = True, None
        for _ in range(samples):
            a = random_alg_element(rng, mha)
            v = random_mod_element(rng, V.module)
            if back.module.act(a, v) != V.module.act(a, v):
                ok, wit = False, "action differs at a=%r v=%r" % (a, v)
                break
            ap = random_alg_element(rng, mha)
            if back.coaction.slice_r(v, ap) != V.coaction.slice_r(v, ap):
                ok, wit = False, ("coaction differs at v=%r a'=%r: %r vs %r"
                                  % (v, ap, back.coaction.slice_r(v, ap),
                                     V.coaction.slice_r(v, ap)))
                break
        rep.add("yd-roundtrip[%s]" % V.name,
                "dcpModuleToYd(ydToDcpModule(V)) = V extensionally", ok, wit)

    # the other direction, from the regular crossed-product module
    dcp = DiagonalCrossedProduct(mha, gyds[0].pair if gyds else None)
    R = regular_dcp_module(dcp)
    W = dcp_module_to_yd(R, integrals)
    sub = check_gyd(W, samples=samples, seed=seed, suite=suite)
    for law in sub.laws:
        rep.add("%s[regular]" % law.law, law.statement, law.ok, law.witness)
    M2 = yd_to_dcp_module(W, dcp)
    ok, wit = True, None
    alg = dcp.algebra
    for _ in range(samples):
        d = alg.el(alg.basis[rng.randrange(len(alg.basis))])
        m = R.el(R.basis[rng.randrange(len(R.basis))])
        if M2.act(d, m) != R.act(d, m):
            ok, wit = False, "d=%r m=%r" % (d, m)
            break
    rep.add("module-roundtrip",
            "ydToDcpModule(dcpModuleToYd(M)) = M extensionally", ok, wit)
    return rep


# -- smash products ---------------------------------------------------------------

def smash_product(dcp, carrier, act, samples=40, seed=0, name=None):
    """The smash product of a unital module algebra over the crossed
    product: (h # d)(h' # d') = h (d_(1).h') # d_(2) d'.

    `carrier` is a unital Algebra and `act(d, h)` the action; the
    module-algebra law d.(hh') = (d_(1).h)(d_(2).h') and the unit laws are
    verified on samples and violations are rejected.
    """
    field = dcp.field
    alg = dcp.algebra
    rng = random.Random(seed)

    def rd():
        return alg.el(alg.basis[rng.randrange(len(alg.basis))])

    def rh():
        return carrier.el(carrier.basis[rng.randrange(len(carrier.basis))])

    for _ in range(samples):
        d, h, hp = rd(), rh(), rh()
        lhs = act(d, carrier.mult(h, hp))
        rhs = Element(field)
        for s, c in dcp.coproduct(d).terms.items():
            d1, d2 = legs(s)
            rhs = rhs + carrier.mult(act(alg.el(d1), h),
                                     act(alg.el(d2), hp)).scaled(c)
        if lhs != rhs:
            raise ValueError(
                "not a module algebra over %s: d.(hh') != (d_(1).h)(d_(2).h') "
                "at d=%r h=%r h'=%r" % (dcp.name, d, h, hp))
        if act(d, carrier.unit) != carrier.unit.scaled(dcp.counit(d)):
            raise ValueError(
                "not a module algebra over %s: d.1 != eps(d)1 at d=%r"
                % (dcp.name, d))

    # symbols are flattened h-legs followed by crossed-product legs
    ha = len(legs(carrier.basis[0]))

    def mult_basis(s1, s2):
        ls1, ls2 = legs(s1), legs(s2)
        h, d = make_sym(ls1[:ha]), make_sym(ls1[ha:])
        hp, dp = make_sym(ls2[:ha]), make_sym(ls2[ha:])
        out = Element(field)
        for s, c in dcp.coproduct(alg.el(d)).terms.items():
            d1, d2 = legs(s)
            moved = act(alg.el(d1), carrier.el(hp))
            hpart = carrier.mult(carrier.el(h), moved)
            dpart = alg.mult(alg.el(d2), alg.el(dp))
            out = out + tensor(hpart, dpart).scaled(c)
        return out

    basis = [tensor(carrier.el(h), alg.el(d)).support()[0]
             for h in carrier.basis for d in alg.basis]
    unit = tensor(carrier.unit, alg.unit)
    return Algebra(field, mult_basis, basis=basis, unit=unit,
                   name=name or ("%s#%s" % (carrier.name, dcp.name)))
