//! 2-categorical integration of 2-Cat-valued 2-functors, with op/co duals.
//!
//! Values are materialized as finite tables: a 2-category per base object, a
//! strict 2-functor per base 1-cell, a strict transformation (its component
//! 1-cells) per base 2-cell. The op and co variants are built both from their
//! defining duality formulas and by a direct construction; `int2` refuses to
//! return unless the two agree cell-for-cell.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::functor::StrictTwoFunctor;
use crate::name::Name;
use crate::slice;
use crate::twocat::{DualKind, TwoCat};
use crate::validate::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum IntVariant {
    Plain,
    Op,
    Co,
}

impl IntVariant {
    pub fn parse(s: &str) -> Option<IntVariant> {
        match s {
            "plain" => Some(IntVariant::Plain),
            "op" => Some(IntVariant::Op),
            "co" => Some(IntVariant::Co),
            _ => None,
        }
    }
}

/// A 2-Cat-valued 2-functor on `base`, with variance fixed by `variant`:
/// Plain is covariant, Op is contravariant on 1-cells, Co reverses the
/// transformation assigned to each 2-cell.
#[derive(Clone, Debug)]
pub struct TwoDiagram {
    pub base: Arc<TwoCat>,
    pub variant: IntVariant,
    pub at: BTreeMap<Name, Arc<TwoCat>>,
    pub one: BTreeMap<Name, StrictTwoFunctor>,
    /// 2-cell of the base -> component 1-cells indexed by fiber objects.
    pub two: BTreeMap<Name, BTreeMap<Name, Name>>,
}

impl TwoDiagram {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for a in self.base.objects() {
            if !self.at.contains_key(a) {
                r.push("diagram-total", vec![a.clone()], "no fiber at object");
            }
        }
        if !r.is_empty() {
            return r;
        }
        for (f, (a, b)) in self.base.one_cells() {
            let Some(ff) = self.one.get(f) else {
                r.push("diagram-total", vec![f.clone()], "no functor at 1-cell");
                continue;
            };
            let (want_dom, want_cod) = match self.variant {
                IntVariant::Plain | IntVariant::Co => (&self.at[a], &self.at[b]),
                IntVariant::Op => (&self.at[b], &self.at[a]),
            };
            if *ff.dom != **want_dom || *ff.cod != **want_cod {
                r.push("diagram", vec![f.clone()], "functor endpoints wrong");
            }
            r.merge(ff.validate());
        }
        if !r.is_empty() {
            return r;
        }
        // functoriality on 1-cells
        for a in self.base.objects() {
            let u = &self.one[self.base.unit1(a)];
            let idf = StrictTwoFunctor::identity(self.at[a].clone());
            if u.on_obj != idf.on_obj || u.on_one != idf.on_one || u.on_two != idf.on_two {
                r.push("diagram", vec![a.clone()], "identity 1-cell not sent to identity");
            }
        }
        for (g, (gb, _)) in self.base.one_cells() {
            for (f, (_, fb)) in self.base.one_cells() {
                if fb != gb {
                    continue;
                }
                let gf = self.base.hcomp1(g, f);
                let comp = match self.variant {
                    IntVariant::Plain | IntVariant::Co => self.one[g].compose(&self.one[f]),
                    IntVariant::Op => self.one[f].compose(&self.one[g]),
                };
                match comp {
                    Err(_) => r.push("diagram", vec![g.clone(), f.clone()], "not composable"),
                    Ok(c) => {
                        let want = &self.one[gf];
                        if c.on_obj != want.on_obj
                            || c.on_one != want.on_one
                            || c.on_two != want.on_two
                        {
                            r.push(
                                "diagram",
                                vec![g.clone(), f.clone()],
                                "functoriality fails on composite 1-cell",
                            );
                        }
                    }
                }
            }
        }
        // components are strict transformations of the right shape
        for (t, _) in self.base.two_cells() {
            let Some(c) = self.two.get(t) else {
                r.push("diagram-total", vec![t.clone()], "no transformation at 2-cell");
                continue;
            };
            let f = self.base.vsrc(t).clone();
            let g = self.base.vtgt(t).clone();
            let (from, to) = match self.variant {
                IntVariant::Plain | IntVariant::Op => (&self.one[&f], &self.one[&g]),
                IntVariant::Co => (&self.one[&g], &self.one[&f]),
            };
            let fiber = &to.cod; // = from.cod
            for x in from.dom.objects() {
                match c.get(x) {
                    None => r.push("diagram-total", vec![t.clone(), x.clone()], "missing component"),
                    Some(cx) => {
                        if !fiber.has_one(cx) {
                            r.push("diagram", vec![t.clone(), x.clone()], "component not a 1-cell");
                            continue;
                        }
                        let (s, e) = fiber.ends1(cx);
                        if s != &from.on_obj[x] || e != &to.on_obj[x] {
                            r.push(
                                "diagram",
                                vec![t.clone(), x.clone()],
                                "component endpoints wrong",
                            );
                        }
                    }
                }
            }
            if !r.is_empty() {
                return r;
            }
            // strict naturality on 1-cells and 2-cells of the fiber
            for (m, (x, y)) in from.dom.one_cells() {
                let lhs = fiber.hcomp1(&c[y], &from.on_one[m]).clone();
                let rhs = fiber.hcomp1(&to.on_one[m], &c[x]).clone();
                if lhs != rhs {
                    r.push(
                        "diagram",
                        vec![t.clone(), m.clone()],
                        "component not strictly natural",
                    );
                }
            }
            for (mu, (x, y)) in from.dom.two_cells() {
                let lhs = fiber
                    .hcomp2(fiber.vid(&c[y]), &from.on_two[mu])
                    .clone();
                let rhs = fiber
                    .hcomp2(&to.on_two[mu], fiber.vid(&c[x]))
                    .clone();
                if lhs != rhs {
                    r.push(
                        "diagram",
                        vec![t.clone(), mu.clone()],
                        "component not natural on 2-cells",
                    );
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // functoriality on 2-cells
        for (f, _) in self.base.one_cells() {
            let idt = self.base.vid(f);
            let carrier = match self.variant {
                IntVariant::Plain | IntVariant::Co => &self.one[f],
                IntVariant::Op => &self.one[f],
            };
            for x in carrier.dom.objects() {
                let want = carrier.cod.unit1(&carrier.on_obj[x]);
                if &self.two[idt][x] != want {
                    r.push(
                        "diagram",
                        vec![f.clone(), x.clone()],
                        "identity 2-cell has non-identity component",
                    );
                }
            }
        }
        for ((_, _), h) in self.base.homs() {
            for b2 in h.arrows() {
                for b1 in h.arrows() {
                    if b1.tgt != b2.src {
                        continue;
                    }
                    let v = h.comp(&b2.name, &b1.name);
                    let dom_objs: Vec<Name> = match self.variant {
                        IntVariant::Plain | IntVariant::Co => {
                            self.one[&b1.src].dom.objects().to_vec()
                        }
                        IntVariant::Op => self.one[&b1.src].dom.objects().to_vec(),
                    };
                    for x in &dom_objs {
                        let fiber = self.one[&b1.src].cod.clone();
                        let want = match self.variant {
                            IntVariant::Plain | IntVariant::Op => fiber
                                .hcomp1(&self.two[&b2.name][x], &self.two[&b1.name][x])
                                .clone(),
                            IntVariant::Co => fiber
                                .hcomp1(&self.two[&b1.name][x], &self.two[&b2.name][x])
                                .clone(),
                        };
                        if self.two[v][x] != want {
                            r.push(
                                "diagram",
                                vec![b2.name.clone(), b1.name.clone(), x.clone()],
                                "vertical functoriality of transformations fails",
                            );
                        }
                    }
                }
            }
        }
        for (b2, (m, _)) in self.base.two_cells() {
            for (b1, (_, m1)) in self.base.two_cells() {
                if m1 != m {
                    continue;
                }
                let hz = self.base.hcomp2(b2, b1).clone();
                let f = self.base.vsrc(b1).clone();
                let ft = self.base.vtgt(b1).clone();
                let g = self.base.vsrc(b2).clone();
                let gt = self.base.vtgt(b2).clone();
                match self.variant {
                    IntVariant::Plain => {
                        let dom = self.one[&f].dom.clone();
                        for x in dom.objects() {
                            let fiber = self.one[&g].cod.clone();
                            let want = fiber
                                .hcomp1(
                                    &self.two[b2][&self.one[&ft].on_obj[x]],
                                    &self.one[&g].on_one[&self.two[b1][x]],
                                )
                                .clone();
                            if self.two[&hz][x] != want {
                                r.push(
                                    "diagram",
                                    vec![b2.clone(), b1.clone(), x.clone()],
                                    "horizontal functoriality fails",
                                );
                            }
                        }
                    }
                    IntVariant::Op => {
                        let dom = self.one[&g].dom.clone();
                        for z in dom.objects() {
                            let fiber = self.one[&f].cod.clone();
                            let want = fiber
                                .hcomp1(
                                    &self.two[b1][&self.one[&gt].on_obj[z]],
                                    &self.one[&f].on_one[&self.two[b2][z]],
                                )
                                .clone();
                            if self.two[&hz][z] != want {
                                r.push(
                                    "diagram",
                                    vec![b2.clone(), b1.clone(), z.clone()],
                                    "horizontal functoriality fails",
                                );
                            }
                        }
                    }
                    IntVariant::Co => {
                        let dom = self.one[&f].dom.clone();
                        for x in dom.objects() {
                            let fiber = self.one[&g].cod.clone();
                            let want = fiber
                                .hcomp1(
                                    &self.one[&g].on_one[&self.two[b1][x]],
                                    &self.two[b2][&self.one[&ft].on_obj[x]],
                                )
                                .clone();
                            if self.two[&hz][x] != want {
                                r.push(
                                    "diagram",
                                    vec![b2.clone(), b1.clone(), x.clone()],
                                    "horizontal functoriality fails",
                                );
                            }
                        }
                    }
                }
            }
        }
        r
    }

    /// The constant diagram at the terminal 2-category.
    pub fn constant_terminal(base: Arc<TwoCat>, variant: IntVariant) -> TwoDiagram {
        let e = Arc::new(crate::twocat::terminal());
        let idf = StrictTwoFunctor::identity(e.clone());
        let at = base.objects().iter().map(|o| (o.clone(), e.clone())).collect();
        let one = base
            .one_cells()
            .map(|(f, _)| (f.clone(), idf.clone()))
            .collect();
        let comp: BTreeMap<Name, Name> = e
            .objects()
            .iter()
            .map(|x| (x.clone(), e.unit1(x).clone()))
            .collect();
        let two = base
            .two_cells()
            .map(|(t, _)| (t.clone(), comp.clone()))
            .collect();
        TwoDiagram {
            base,
            variant,
            at,
            one,
            two,
        }
    }

    /// Same tables between duals, used by the op/co integration formulas.
    fn transport(&self, kind: DualKind) -> TwoDiagram {
        TwoDiagram {
            base: Arc::new(self.base.dual(kind)),
            variant: IntVariant::Plain,
            at: self
                .at
                .iter()
                .map(|(a, c)| (a.clone(), Arc::new(c.dual(kind))))
                .collect(),
            one: self
                .one
                .iter()
                .map(|(f, u)| {
                    (
                        f.clone(),
                        StrictTwoFunctor {
                            dom: Arc::new(u.dom.dual(kind)),
                            cod: Arc::new(u.cod.dual(kind)),
                            on_obj: u.on_obj.clone(),
                            on_one: u.on_one.clone(),
                            on_two: u.on_two.clone(),
                        },
                    )
                })
                .collect(),
            two: self.two.clone(),
        }
    }
}

pub fn iob(a: &Name, x: &Name) -> Name {
    Name::pair("iob", a.clone(), x.clone())
}

pub fn ione(f: &Name, r: &Name, slot: &Name) -> Name {
    Name::node("ione", vec![f.clone(), r.clone(), slot.clone()])
}

pub fn itwo(g: &Name, phi: &Name, slot1: &Name, slot2: &Name) -> Name {
    Name::node("itwo", vec![g.clone(), phi.clone(), slot1.clone(), slot2.clone()])
}

pub fn iob_parts(n: &Name) -> (Name, Name) {
    match n {
        Name::Node("iob", p) => (p[0].clone(), p[1].clone()),
        _ => panic!("not an integration object: {n}"),
    }
}

pub fn ione_parts(n: &Name) -> (Name, Name, Name) {
    match n {
        Name::Node("ione", p) => (p[0].clone(), p[1].clone(), p[2].clone()),
        _ => panic!("not an integration 1-cell: {n}"),
    }
}

pub fn itwo_parts(n: &Name) -> (Name, Name, Name, Name) {
    match n {
        Name::Node("itwo", p) => (p[0].clone(), p[1].clone(), p[2].clone(), p[3].clone()),
        _ => panic!("not an integration 2-cell: {n}"),
    }
}

#[derive(Clone, Debug)]
pub struct Integration {
    pub twocat: Arc<TwoCat>,
    pub projection: StrictTwoFunctor,
}

/// Integrates the diagram; for the op/co variants the result is computed both
/// from the duality formula and directly, and the two must agree.
pub fn int2(diag: &TwoDiagram) -> Result<Integration> {
    let r = diag.validate();
    if !r.is_empty() {
        return Err(Error::Invalid(r));
    }
    match diag.variant {
        IntVariant::Plain => build_direct(diag),
        IntVariant::Op => {
            let direct = build_direct(diag)?;
            let inner = build_direct(&diag.transport(DualKind::Coop))?;
            let formula = Arc::new(inner.twocat.dual(DualKind::Coop));
            check_same(diag, &direct, &formula, &inner.projection)?;
            Ok(direct)
        }
        IntVariant::Co => {
            let direct = build_direct(diag)?;
            let inner = build_direct(&diag.transport(DualKind::Co))?;
            let formula = Arc::new(inner.twocat.dual(DualKind::Co));
            check_same(diag, &direct, &formula, &inner.projection)?;
            Ok(direct)
        }
    }
}

fn check_same(
    diag: &TwoDiagram,
    direct: &Integration,
    formula: &Arc<TwoCat>,
    inner_proj: &StrictTwoFunctor,
) -> Result<()> {
    if *direct.twocat != **formula {
        return Err(Error::Mismatch {
            what: "integration duality formula",
            detail: format!("{:?} variant differs from its formula construction", diag.variant),
        });
    }
    if direct.projection.on_obj != inner_proj.on_obj
        || direct.projection.on_one != inner_proj.on_one
        || direct.projection.on_two != inner_proj.on_two
    {
        return Err(Error::Mismatch {
            what: "integration projection",
            detail: "formula and direct projections differ".into(),
        });
    }
    Ok(())
}

/// Direct construction per the explicit cell descriptions.
fn build_direct(diag: &TwoDiagram) -> Result<Integration> {
    let base = &diag.base;
    let mut objects = Vec::new();
    for a in base.objects() {
        for x in diag.at[a].objects() {
            objects.push(iob(a, x));
        }
    }

    struct One {
        name: Name,
        f: Name,
        r: Name,
        src: Name,
        tgt: Name,
    }
    let mut ones: Vec<One> = Vec::new();
    for (f, (a, b)) in base.one_cells() {
        match diag.variant {
            IntVariant::Plain | IntVariant::Co => {
                // r : F(f)(x) -> x' in at(b); slot = x
                let ff = &diag.one[f];
                for x in diag.at[a].objects() {
                    let fx = &ff.on_obj[x];
                    for ((s, t), h) in diag.at[b].homs() {
                        if s != fx {
                            continue;
                        }
                        for rr in h.objects() {
                            ones.push(One {
                                name: ione(f, rr, x),
                                f: f.clone(),
                                r: rr.clone(),
                                src: iob(a, x),
                                tgt: iob(b, t),
                            });
                        }
                    }
                }
            }
            IntVariant::Op => {
                // r : x -> F(f)(x') in at(a); slot = x'
                let ff = &diag.one[f];
                for xp in diag.at[b].objects() {
                    let fxp = &ff.on_obj[xp];
                    for ((s, t), h) in diag.at[a].homs() {
                        if t != fxp {
                            continue;
                        }
                        for rr in h.objects() {
                            ones.push(One {
                                name: ione(f, rr, xp),
                                f: f.clone(),
                                r: rr.clone(),
                                src: iob(a, s),
                                tgt: iob(b, xp),
                            });
                        }
                    }
                }
            }
        }
    }

    // 2-cells, per ordered pair of parallel 1-cells
    struct Two {
        name: Name,
        gamma: Name,
        src: Name,
        tgt: Name,
    }
    let mut twos: Vec<Two> = Vec::new();
    for c1 in &ones {
        for c2 in &ones {
            if c1.src != c2.src || c1.tgt != c2.tgt {
                continue;
            }
            let (a, x) = iob_parts(&c1.src);
            let (b, xp) = iob_parts(&c1.tgt);
            let (fa, fb) = base.ends1(&c1.f);
            for gamma in base.hom(fa, fb).arrows() {
                if gamma.src != c1.f || gamma.tgt != c2.f {
                    continue;
                }
                match diag.variant {
                    IntVariant::Plain => {
                        // phi : r => s . (F gamma)_x in at(b)
                        let fiber = &diag.at[&b];
                        let tgt1 = fiber
                            .hcomp1(&c2.r, &diag.two[&gamma.name][&x])
                            .clone();
                        let (hs, ht) = fiber.ends1(&c1.r).clone();
                        for phi in fiber.hom(&hs, &ht).arrows() {
                            if phi.src == c1.r && phi.tgt == tgt1 {
                                twos.push(Two {
                                    name: itwo(&gamma.name, &phi.name, &x, &c2.r),
                                    gamma: gamma.name.clone(),
                                    src: c1.name.clone(),
                                    tgt: c2.name.clone(),
                                });
                            }
                        }
                    }
                    IntVariant::Op => {
                        // phi : (F gamma)_{x'} . r => s in at(a)
                        let fiber = &diag.at[&a];
                        let src1 = fiber
                            .hcomp1(&diag.two[&gamma.name][&xp], &c1.r)
                            .clone();
                        let (hs, ht) = fiber.ends1(&c2.r).clone();
                        for phi in fiber.hom(&hs, &ht).arrows() {
                            if phi.src == src1 && phi.tgt == c2.r {
                                twos.push(Two {
                                    name: itwo(&gamma.name, &phi.name, &xp, &c1.r),
                                    gamma: gamma.name.clone(),
                                    src: c1.name.clone(),
                                    tgt: c2.name.clone(),
                                });
                            }
                        }
                    }
                    IntVariant::Co => {
                        // phi : r . (F gamma)_x => s in at(b), components go F(g) -> F(f)
                        let fiber = &diag.at[&b];
                        let src1 = fiber
                            .hcomp1(&c1.r, &diag.two[&gamma.name][&x])
                            .clone();
                        let (hs, ht) = fiber.ends1(&c2.r).clone();
                        for phi in fiber.hom(&hs, &ht).arrows() {
                            if phi.src == src1 && phi.tgt == c2.r {
                                twos.push(Two {
                                    name: itwo(&gamma.name, &phi.name, &x, &c1.r),
                                    gamma: gamma.name.clone(),
                                    src: c1.name.clone(),
                                    tgt: c2.name.clone(),
                                });
                            }
                        }
                    }
                }
            }
        }
    }

    // hom categories
    let one_by_name: BTreeMap<Name, usize> = ones
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.clone(), i))
        .collect();
    let mut homs: BTreeMap<(Name, Name), crate::cat::FinCat> = BTreeMap::new();
    for s in &objects {
        for t in &objects {
            let local_ones: Vec<&One> = ones
                .iter()
                .filter(|c| c.src == *s && c.tgt == *t)
                .collect();
            let local_twos: Vec<&Two> = twos
                .iter()
                .filter(|w| {
                    let c = &ones[one_by_name[&w.src]];
                    c.src == *s && c.tgt == *t
                })
                .collect();
            let arrows: Vec<crate::cat::Arrow> = local_twos
                .iter()
                .map(|w| crate::cat::Arrow {
                    name: w.name.clone(),
                    src: w.src.clone(),
                    tgt: w.tgt.clone(),
                })
                .collect();
            // identities
            let mut identity = BTreeMap::new();
            for c in &local_ones {
                let (a, x) = iob_parts(s);
                let (b, xp) = iob_parts(t);
                let _ = (&a, &b, &x, &xp);
                let idg = base.vid(&c.f).clone();
                let fiber = match diag.variant {
                    IntVariant::Plain | IntVariant::Co => &diag.at[&iob_parts(t).0],
                    IntVariant::Op => &diag.at[&iob_parts(s).0],
                };
                let idphi = fiber.vid(&c.r).clone();
                let slot1 = match diag.variant {
                    IntVariant::Plain | IntVariant::Co => iob_parts(s).1,
                    IntVariant::Op => iob_parts(t).1,
                };
                identity.insert(c.name.clone(), itwo(&idg, &idphi, &slot1, &c.r));
            }
            // vertical composition
            let mut comp = BTreeMap::new();
            for w2 in &local_twos {
                for w1 in &local_twos {
                    if w1.tgt != w2.src {
                        continue;
                    }
                    let (g2, phi2, _, _) = itwo_parts(&w2.name);
                    let (g1, phi1, slot1, _) = itwo_parts(&w1.name);
                    let gc = base.vcomp(&g2, &g1).clone();
                    let c1 = &ones[one_by_name[&w1.src]];
                    let c3 = &ones[one_by_name[&w2.tgt]];
                    let psi = match diag.variant {
                        IntVariant::Plain => {
                            let fiber = &diag.at[&iob_parts(t).0];
                            let cx = &diag.two[&g1][&iob_parts(s).1];
                            fiber
                                .vcomp(&fiber.whisker_r(&phi2, cx), &phi1)
                                .clone()
                        }
                        IntVariant::Op => {
                            let fiber = &diag.at[&iob_parts(s).0];
                            let cpx = &diag.two[&g2][&iob_parts(t).1];
                            fiber
                                .vcomp(&phi2, &fiber.whisker_l(cpx, &phi1))
                                .clone()
                        }
                        IntVariant::Co => {
                            let fiber = &diag.at[&iob_parts(t).0];
                            let cpx = &diag.two[&g2][&iob_parts(s).1];
                            fiber
                                .vcomp(&phi2, &fiber.whisker_r(&phi1, cpx))
                                .clone()
                        }
                    };
                    let nm = match diag.variant {
                        IntVariant::Plain => itwo(&gc, &psi, &slot1, &c3.r),
                        IntVariant::Op | IntVariant::Co => itwo(&gc, &psi, &slot1, &c1.r),
                    };
                    comp.insert((w2.name.clone(), w1.name.clone()), nm);
                }
            }
            let objs: Vec<Name> = local_ones.iter().map(|c| c.name.clone()).collect();
            homs.insert(
                (s.clone(), t.clone()),
                crate::cat::FinCat::new_unchecked(objs, arrows, identity, comp),
            );
        }
    }

    // unit 1-cells
    let mut unit1 = BTreeMap::new();
    for o in &objects {
        let (a, x) = iob_parts(o);
        unit1.insert(
            o.clone(),
            ione(base.unit1(&a), diag.at[&a].unit1(&x), &x),
        );
    }

    // horizontal composition of 1-cells
    let mut hcomp1 = BTreeMap::new();
    for c2 in &ones {
        for c1 in &ones {
            if c1.tgt != c2.src {
                continue;
            }
            let gf = base.hcomp1(&c2.f, &c1.f).clone();
            match diag.variant {
                IntVariant::Plain | IntVariant::Co => {
                    let (b2, _) = iob_parts(&c2.tgt);
                    let fiber = &diag.at[&b2];
                    let t = fiber
                        .hcomp1(&c2.r, &diag.one[&c2.f].on_one[&c1.r])
                        .clone();
                    let (_, x) = iob_parts(&c1.src);
                    hcomp1.insert((c2.name.clone(), c1.name.clone()), ione(&gf, &t, &x));
                }
                IntVariant::Op => {
                    let (a0, _) = iob_parts(&c1.src);
                    let fiber = &diag.at[&a0];
                    let t = fiber
                        .hcomp1(&diag.one[&c1.f].on_one[&c2.r], &c1.r)
                        .clone();
                    let (_, xpp) = iob_parts(&c2.tgt);
                    hcomp1.insert((c2.name.clone(), c1.name.clone()), ione(&gf, &t, &xpp));
                }
            }
        }
    }

    // horizontal composition of 2-cells
    let two_by_name: BTreeMap<Name, usize> = twos
        .iter()
        .enumerate()
        .map(|(i, w)| (w.name.clone(), i))
        .collect();
    let mut hcomp2: BTreeMap<(Name, Name), Name> = BTreeMap::new();
    for w2 in &twos {
        let y1 = &ones[one_by_name[&w2.src]];
        let y2 = &ones[one_by_name[&w2.tgt]];
        for w1 in &twos {
            let x1 = &ones[one_by_name[&w1.src]];
            let x2 = &ones[one_by_name[&w1.tgt]];
            if x1.tgt != y1.src {
                continue;
            }
            let gg = base.hcomp2(&w2.gamma, &w1.gamma).clone();
            let (_, phi1, _, _) = itwo_parts(&w1.name);
            let (_, phi2, _, _) = itwo_parts(&w2.name);
            let chi;
            let nm;
            match diag.variant {
                IntVariant::Plain => {
                    let (bpp, _) = iob_parts(&y1.tgt);
                    let fiber = &diag.at[&bpp];
                    let (_, x) = iob_parts(&x1.src);
                    let term2 = fiber.hcomp2(
                        &fiber.hcomp2(fiber.vid(&y2.r), &diag.one[&y2.f].on_two[&phi1]).clone(),
                        fiber.vid(&diag.two[&w2.gamma][&diag.one[&x1.f].on_obj[&x]]),
                    ).clone();
                    let term1 = fiber
                        .hcomp2(&phi2, fiber.vid(&diag.one[&y1.f].on_one[&x1.r]))
                        .clone();
                    chi = fiber.vcomp(&term2, &term1).clone();
                    let src_comp = hcomp1[&(w2.src.clone(), w1.src.clone())].clone();
                    let tgt_comp = hcomp1[&(w2.tgt.clone(), w1.tgt.clone())].clone();
                    let (_, tr, _) = ione_parts(&tgt_comp);
                    let (_, _, sslot) = ione_parts(&src_comp);
                    nm = itwo(&gg, &chi, &sslot, &tr);
                }
                IntVariant::Op => {
                    let (a0, _) = iob_parts(&x1.src);
                    let fiber = &diag.at[&a0];
                    let xpp = iob_parts(&y1.tgt).1;
                    let term2 = fiber
                        .hcomp2(
                            &fiber
                                .hcomp2(
                                    fiber.vid(&diag.two[&w1.gamma][&diag.one[&y2.f].on_obj[&xpp]]),
                                    &diag.one[&x1.f].on_two[&phi2],
                                )
                                .clone(),
                            fiber.vid(&x1.r),
                        )
                        .clone();
                    let term1 = fiber
                        .hcomp2(fiber.vid(&diag.one[&x2.f].on_one[&y2.r]), &phi1)
                        .clone();
                    chi = fiber.vcomp(&term1, &term2).clone();
                    let src_comp = hcomp1[&(w2.src.clone(), w1.src.clone())].clone();
                    let (_, sr, sslot) = ione_parts(&src_comp);
                    let _ = sslot;
                    nm = itwo(&gg, &chi, &xpp, &sr);
                }
                IntVariant::Co => {
                    let (bpp, _) = iob_parts(&y1.tgt);
                    let fiber = &diag.at[&bpp];
                    let (_, x) = iob_parts(&x1.src);
                    let term2 = fiber
                        .hcomp2(
                            &fiber
                                .hcomp2(fiber.vid(&y1.r), &diag.one[&y1.f].on_two[&phi1])
                                .clone(),
                            fiber.vid(&diag.two[&w2.gamma][&diag.one[&x2.f].on_obj[&x]]),
                        )
                        .clone();
                    let term1 = fiber
                        .hcomp2(&phi2, fiber.vid(&diag.one[&y2.f].on_one[&x2.r]))
                        .clone();
                    chi = fiber.vcomp(&term1, &term2).clone();
                    let src_comp = hcomp1[&(w2.src.clone(), w1.src.clone())].clone();
                    let (_, sr, sslot) = ione_parts(&src_comp);
                    nm = itwo(&gg, &chi, &sslot, &sr);
                }
            }
            hcomp2.insert((w2.name.clone(), w1.name.clone()), nm);
        }
    }
    let _ = two_by_name;

    let twocat = Arc::new(TwoCat::new(objects, homs, unit1, hcomp1, hcomp2)?);
    let projection = StrictTwoFunctor::new(
        twocat.clone(),
        base.clone(),
        twocat
            .objects()
            .iter()
            .map(|o| (o.clone(), iob_parts(o).0))
            .collect(),
        twocat
            .one_cells()
            .map(|(c, _)| (c.clone(), ione_parts(c).0))
            .collect(),
        twocat
            .two_cells()
            .map(|(c, _)| (c.clone(), itwo_parts(c).0))
            .collect(),
    )?;
    Ok(Integration { twocat, projection })
}

/// For a plain integration: the canonical `J_a` into the lax slice of the
/// projection over `a`, and the retraction `K_a`.
pub fn k_retraction(
    diag: &TwoDiagram,
    a: &Name,
) -> Result<(Integration, StrictTwoFunctor, StrictTwoFunctor)> {
    if diag.variant != IntVariant::Plain {
        return Err(Error::Mismatch {
            what: "k_retraction",
            detail: "defined for the plain integration variant".into(),
        });
    }
    let integ = int2(diag)?;
    let j = slice::j_canonical(&integ.projection, a, slice::SliceKind::TrancheLax)?;
    let sl = slice::tranche_lax(&integ.projection.as_lax(), a)?;
    let fib = slice::fiber(&integ.projection, a)?;

    let fiber_at = &diag.at[a];
    let base = &diag.base;

    let on_obj: BTreeMap<Name, Name> = sl
        .twocat
        .objects()
        .iter()
        .map(|o| {
            let (inner, p) = slice::ob_parts(o);
            let (_, xp) = iob_parts(&inner);
            (o.clone(), iob(a, &diag.one[&p].on_obj[&xp]))
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = sl
        .twocat
        .one_cells()
        .map(|(c, _)| {
            let (inner_one, sigma, pslot) = slice::one_parts(c);
            let (f, r, _) = ione_parts(&inner_one);
            let _ = f;
            // the slice 1-cell runs (inner-src, p) -> (inner-tgt, p'); recover
            // p from the source object of the slice 1-cell
            let (src_ob, _) = sl.twocat.ends1(c).clone();
            let (inner_src, _p_src) = slice::ob_parts(&src_ob);
            let (_, xp) = iob_parts(&inner_src);
            let t = fiber_at
                .hcomp1(&diag.one[&pslot].on_one[&r], &diag.two[&sigma][&xp])
                .clone();
            let src_elem = diag.one[&_p_src].on_obj[&xp].clone();
            (c.clone(), ione(base.unit1(a), &t, &src_elem))
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = sl
        .twocat
        .two_cells()
        .map(|(c, _)| {
            let beta = {
                // underlying integration 2-cell of the slice 2-cell
                match c {
                    Name::Node("two", parts) => parts[2].clone(),
                    _ => unreachable!(),
                }
            };
            let (gamma, phi, _, _) = itwo_parts(&beta);
            let (x_src_one, _) = match c {
                Name::Node("two", parts) => (parts[0].clone(), parts[1].clone()),
                _ => unreachable!(),
            };
            let (_, sigma, pslot) = slice::one_parts(&x_src_one);
            let src_ob = {
                let (s, _) = sl.twocat.ends1(&x_src_one).clone();
                s
            };
            let (inner_src, p_src) = slice::ob_parts(&src_ob);
            let (_, xp) = iob_parts(&inner_src);
            let chi = fiber_at
                .hcomp2(
                    &diag.one[&pslot].on_two[&phi],
                    fiber_at.vid(&diag.two[&sigma][&xp]),
                )
                .clone();
            let _ = gamma;
            let src_elem = diag.one[&p_src].on_obj[&xp].clone();
            let img_src = on_one[&x_src_one].clone();
            let (_, r0, _) = ione_parts(&img_src);
            (
                c.clone(),
                itwo(base.vid(base.unit1(a)), &chi, &src_elem, &r0),
            )
        })
        .collect();
    let k = StrictTwoFunctor::new(sl.twocat.clone(), fib, on_obj, on_one, on_two)?;
    Ok((integ, j, k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;
    use crate::functor::iso_check;
    use crate::slice::{is_prefibration, PrefibrationKind};
    use crate::twocat::from_cat;

    fn arrow2() -> Arc<TwoCat> {
        Arc::new(from_cat(&ordinal(1)))
    }

    /// F over [1] with F(0) = F(1) = from_cat([1]), F(arrow) = id.
    fn const_arrow_diag(variant: IntVariant) -> TwoDiagram {
        let base = arrow2();
        let fib = arrow2();
        let idf = StrictTwoFunctor::identity(fib.clone());
        let comp: BTreeMap<Name, Name> = fib
            .objects()
            .iter()
            .map(|x| (x.clone(), fib.unit1(x).clone()))
            .collect();
        TwoDiagram {
            base: base.clone(),
            variant,
            at: base.objects().iter().map(|o| (o.clone(), fib.clone())).collect(),
            one: base.one_cells().map(|(f, _)| (f.clone(), idf.clone())).collect(),
            two: base.two_cells().map(|(t, _)| (t.clone(), comp.clone())).collect(),
        }
    }

    #[test]
    fn constant_terminal_integrates_to_base() {
        let base = arrow2();
        let d = TwoDiagram::constant_terminal(base.clone(), IntVariant::Plain);
        let i = int2(&d).unwrap();
        assert_eq!(i.twocat.objects().len(), base.objects().len());
        assert_eq!(i.twocat.one_count(), base.one_count());
        assert_eq!(i.twocat.two_count(), base.two_count());
    }

    #[test]
    fn op_and_co_match_their_formulas() {
        for v in [IntVariant::Op, IntVariant::Co] {
            let d = const_arrow_diag(v);
            let i = int2(&d).unwrap();
            assert!(i.projection.validate().is_empty());
        }
    }

    #[test]
    fn plain_projection_is_precoopfibration() {
        let d = const_arrow_diag(IntVariant::Plain);
        let i = int2(&d).unwrap();
        assert!(is_prefibration(&i.projection, PrefibrationKind::Precoop).unwrap());
    }

    #[test]
    fn fiber_identifies_with_value() {
        let d = const_arrow_diag(IntVariant::Plain);
        let i = int2(&d).unwrap();
        for a in d.base.objects() {
            let fib = crate::slice::fiber(&i.projection, a).unwrap();
            // canonical identification onto F(a)
            let on_obj: BTreeMap<Name, Name> = fib
                .objects()
                .iter()
                .map(|o| (o.clone(), iob_parts(o).1))
                .collect();
            let on_one: BTreeMap<Name, Name> = fib
                .one_cells()
                .map(|(c, _)| (c.clone(), ione_parts(c).1))
                .collect();
            let on_two: BTreeMap<Name, Name> = fib
                .two_cells()
                .map(|(c, _)| (c.clone(), itwo_parts(c).1))
                .collect();
            let map =
                StrictTwoFunctor::new(fib, d.at[a].clone(), on_obj, on_one, on_two).unwrap();
            assert!(iso_check(&map).unwrap());
        }
    }

    #[test]
    fn k_after_j_is_identity() {
        let d = const_arrow_diag(IntVariant::Plain);
        for a in d.base.objects() {
            let (_, j, k) = k_retraction(&d, a).unwrap();
            let kj = k.compose(&j).unwrap();
            let id = StrictTwoFunctor::identity(j.dom.clone());
            assert_eq!(kj.on_obj, id.on_obj);
            assert_eq!(kj.on_one, id.on_one);
            assert_eq!(kj.on_two, id.on_two);
        }
    }

    #[test]
    fn k_is_left_lax_preadjoint() {
        let d = const_arrow_diag(IntVariant::Plain);
        let a = &d.base.objects()[0].clone();
        let (_, _, k) = k_retraction(&d, a).unwrap();
        let kl = k.as_lax();
        assert!(crate::slice::is_preadjoint(
            crate::slice::SliceFunctor::Lax(&kl),
            crate::slice::Side::Left,
            crate::slice::Flavor::Lax
        )
        .unwrap());
    }

    #[test]
    fn op_restricted_to_sets_matches_cat_of_elements() {
        // a set-valued op-diagram over from_cat([1]): fibers are discrete
        let base = arrow2();
        let two_el: Arc<TwoCat> = Arc::new(from_cat(&crate::cat::FinCat::new_unchecked(
            vec![Name::atom("x0"), Name::atom("x1")],
            vec![
                crate::cat::Arrow {
                    name: Name::atom("ix0"),
                    src: Name::atom("x0"),
                    tgt: Name::atom("x0"),
                },
                crate::cat::Arrow {
                    name: Name::atom("ix1"),
                    src: Name::atom("x1"),
                    tgt: Name::atom("x1"),
                },
            ],
            [
                (Name::atom("x0"), Name::atom("ix0")),
                (Name::atom("x1"), Name::atom("ix1")),
            ]
            .into_iter()
            .collect(),
            [
                ((Name::atom("ix0"), Name::atom("ix0")), Name::atom("ix0")),
                ((Name::atom("ix1"), Name::atom("ix1")), Name::atom("ix1")),
            ]
            .into_iter()
            .collect(),
        )));
        let one_el = Arc::new(crate::twocat::terminal());
        // F(1) = 2 elements, F(0) = 1 element, F(arrow): collapses
        let mut at = BTreeMap::new();
        at.insert(Name::num(0), one_el.clone());
        at.insert(Name::num(1), two_el.clone());
        let collapse = {
            let on_obj: BTreeMap<Name, Name> = two_el
                .objects()
                .iter()
                .map(|o| (o.clone(), one_el.objects()[0].clone()))
                .collect();
            let on_one: BTreeMap<Name, Name> = two_el
                .one_cells()
                .map(|(c, _)| (c.clone(), one_el.one_cells().next().unwrap().0.clone()))
                .collect();
            let on_two: BTreeMap<Name, Name> = two_el
                .two_cells()
                .map(|(c, _)| (c.clone(), one_el.two_cells().next().unwrap().0.clone()))
                .collect();
            StrictTwoFunctor::new(two_el.clone(), one_el.clone(), on_obj, on_one, on_two)
                .unwrap()
        };
        let mut one = BTreeMap::new();
        one.insert(
            base.unit1(&Name::num(0)).clone(),
            StrictTwoFunctor::identity(one_el.clone()),
        );
        one.insert(
            base.unit1(&Name::num(1)).clone(),
            StrictTwoFunctor::identity(two_el.clone()),
        );
        let nonid = base
            .one_cells()
            .map(|(f, _)| f.clone())
            .find(|f| *f == Name::node("le", vec![Name::num(0), Name::num(1)]))
            .unwrap();
        one.insert(nonid, collapse);
        let two: BTreeMap<Name, BTreeMap<Name, Name>> = base
            .two_cells()
            .map(|(t, _)| {
                let f = base.vsrc(t).clone();
                let ff = &one[&f];
                let comp = ff
                    .dom
                    .objects()
                    .iter()
                    .map(|x| (x.clone(), ff.cod.unit1(&ff.on_obj[x]).clone()))
                    .collect();
                (t.clone(), comp)
            })
            .collect();
        let d = TwoDiagram {
            base: base.clone(),
            variant: IntVariant::Op,
            at,
            one,
            two,
        };
        let i = int2(&d).unwrap();
        // as a category of elements: 3 objects, arrows = identities + one per
        // (nonid arrow, element of F(1)) = 3 + 2
        assert_eq!(i.twocat.objects().len(), 3);
        assert_eq!(i.twocat.one_count(), 5);
    }
}
