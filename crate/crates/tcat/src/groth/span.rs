//! The comma spans S1, S2 and S(u): direct constructions, canonical
//! isomorphisms onto integrations of slice-valued diagrams, fiber
//! identifications, and functoriality squares.
//!
//! The canonical maps are written from the identifications: an image cell is
//! pinned down by its rearranged components (base part, slice part, underlying
//! cell) and located in the already-built target; `iso_check` then certifies
//! the assembled mapping. A failed lookup or a non-iso is reported, never
//! repaired.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::functor::{iso_check, StrictTwoFunctor};
use crate::name::Name;
use crate::slice::{
    self, ob_name, slice_variant, tranche_lax, Slice, SliceFunctor, SliceKind,
};
use crate::twocat::{DualKind, TwoCat};

use super::two::{int2, iob, IntVariant, TwoDiagram};

#[derive(Clone, Debug)]
pub struct SSpan {
    pub twocat: Arc<TwoCat>,
    /// projection to the dualized side (A^op, A^co, or B^op)
    pub left: StrictTwoFunctor,
    /// projection to the plain side
    pub right: StrictTwoFunctor,
}

fn sob(a: Option<&Name>, k: &Name) -> Name {
    match a {
        Some(a) => Name::node("sob", vec![a.clone(), k.clone()]),
        None => Name::node("sob", vec![k.clone()]),
    }
}

fn sone(f: &Name, g: &Name, al: &Name, k: &Name, kp: &Name) -> Name {
    Name::node(
        "sone",
        vec![f.clone(), g.clone(), al.clone(), k.clone(), kp.clone()],
    )
}

fn stwo(phi: &Name, gamma: &Name, src: &Name) -> Name {
    Name::node("stwo", vec![phi.clone(), gamma.clone(), src.clone()])
}

pub(crate) fn sone_parts(n: &Name) -> (Name, Name, Name, Name, Name) {
    match n {
        Name::Node("sone", p) => (
            p[0].clone(),
            p[1].clone(),
            p[2].clone(),
            p[3].clone(),
            p[4].clone(),
        ),
        _ => panic!("not a span 1-cell: {n}"),
    }
}

pub(crate) fn stwo_parts(n: &Name) -> (Name, Name, Name) {
    match n {
        Name::Node("stwo", p) => (p[0].clone(), p[1].clone(), p[2].clone()),
        _ => panic!("not a span 2-cell: {n}"),
    }
}

fn sob_k(o: &Name) -> Name {
    match o {
        Name::Node("sob", p) => p.last().unwrap().clone(),
        _ => panic!("not a span object: {o}"),
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum SpanKind {
    S1,
    S2,
    SU,
}

fn build_span(kind: SpanKind, u: &StrictTwoFunctor) -> Result<Arc<TwoCat>> {
    let a_cat = &u.dom;
    let b_cat = &u.cod;
    let mut objects = Vec::new();
    let mut legs: BTreeMap<Name, (Name, Name)> = BTreeMap::new(); // sob -> (a-part, k)
    match kind {
        SpanKind::S1 | SpanKind::S2 => {
            for (k, _) in b_cat.one_cells() {
                let o = sob(None, k);
                legs.insert(o.clone(), (Name::atom("_"), k.clone()));
                objects.push(o);
            }
        }
        SpanKind::SU => {
            for a in a_cat.objects() {
                for b in b_cat.objects() {
                    for k in b_cat.hom(b, &u.on_obj[a]).objects() {
                        let o = sob(Some(a), k);
                        legs.insert(o.clone(), (a.clone(), k.clone()));
                        objects.push(o);
                    }
                }
            }
        }
    }

    struct One {
        name: Name,
        f: Name,
        g: Name,
        al: Name,
        src: Name,
        tgt: Name,
    }
    let mut ones: Vec<One> = Vec::new();
    for (s, (sa, k)) in &legs {
        for (t, (ta, kp)) in &legs {
            let (kb, ka) = b_cat.ends1(k).clone();
            let (kpb, kpa) = b_cat.ends1(kp).clone();
            match kind {
                SpanKind::S1 => {
                    // f : b' -> b, g : a -> a', alpha : k' => g k f
                    for cf in b_cat.hom(&kpb, &kb).objects() {
                        for cg in b_cat.hom(&ka, &kpa).objects() {
                            let comp =
                                b_cat.hcomp1(&b_cat.hcomp1(cg, k).clone(), cf).clone();
                            for al in b_cat.hom(&kpb, &kpa).arrows() {
                                if al.src == *kp && al.tgt == comp {
                                    ones.push(One {
                                        name: sone(cf, cg, &al.name, k, kp),
                                        f: cf.clone(),
                                        g: cg.clone(),
                                        al: al.name.clone(),
                                        src: s.clone(),
                                        tgt: t.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
                SpanKind::S2 => {
                    // f : b -> b', g : a -> a', alpha : k' f => g k
                    for cf in b_cat.hom(&kb, &kpb).objects() {
                        for cg in b_cat.hom(&ka, &kpa).objects() {
                            let lhs = b_cat.hcomp1(kp, cf).clone();
                            let rhs = b_cat.hcomp1(cg, k).clone();
                            for al in b_cat.hom(&kb, &kpa).arrows() {
                                if al.src == lhs && al.tgt == rhs {
                                    ones.push(One {
                                        name: sone(cf, cg, &al.name, k, kp),
                                        f: cf.clone(),
                                        g: cg.clone(),
                                        al: al.name.clone(),
                                        src: s.clone(),
                                        tgt: t.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
                SpanKind::SU => {
                    // f : b' -> b, g : a -> a', alpha : u(g) k f => k'
                    for cf in b_cat.hom(&kpb, &kb).objects() {
                        for cg in a_cat.hom(sa, ta).objects() {
                            let lhs = b_cat
                                .hcomp1(&b_cat.hcomp1(&u.on_one[cg], k).clone(), cf)
                                .clone();
                            for al in b_cat.hom(&kpb, &kpa).arrows() {
                                if al.src == lhs && al.tgt == *kp {
                                    ones.push(One {
                                        name: sone(cf, cg, &al.name, k, kp),
                                        f: cf.clone(),
                                        g: cg.clone(),
                                        al: al.name.clone(),
                                        src: s.clone(),
                                        tgt: t.clone(),
                                    });
                                }
                            }
                        }
                    }
                }
            }
        }
    }

    struct Two {
        name: Name,
        phi: Name,
        gamma: Name,
        src: Name,
        tgt: Name,
    }
    let mut twos: Vec<Two> = Vec::new();
    for x in &ones {
        for y in &ones {
            if x.src != y.src || x.tgt != y.tgt {
                continue;
            }
            let k = &legs[&x.src].1;
            let kp = &legs[&x.tgt].1;
            let (fb1, fb2) = b_cat.ends1(&x.f).clone();
            let phis: Vec<Name> = b_cat
                .hom(&fb1, &fb2)
                .arrows()
                .iter()
                .filter(|p| match kind {
                    SpanKind::S2 => p.src == y.f && p.tgt == x.f,
                    _ => p.src == x.f && p.tgt == y.f,
                })
                .map(|p| p.name.clone())
                .collect();
            let g_cat: &Arc<TwoCat> = match kind {
                SpanKind::SU => &u.dom,
                _ => b_cat,
            };
            let (ga, gb) = g_cat.ends1(&x.g).clone();
            let gammas: Vec<Name> = g_cat
                .hom(&ga, &gb)
                .arrows()
                .iter()
                .filter(|p| p.src == x.g && p.tgt == y.g)
                .map(|p| p.name.clone())
                .collect();
            for phi in &phis {
                for gamma in &gammas {
                    let ok = match kind {
                        SpanKind::S1 => {
                            let w = b_cat
                                .hcomp2(&b_cat.hcomp2(gamma, b_cat.vid(k)).clone(), phi)
                                .clone();
                            *b_cat.vcomp(&w, &x.al) == y.al
                        }
                        SpanKind::S2 => {
                            let w1 = b_cat.hcomp2(b_cat.vid(kp), phi).clone();
                            let w2 = b_cat.hcomp2(gamma, b_cat.vid(k)).clone();
                            *b_cat.vcomp(&w2, &b_cat.vcomp(&x.al, &w1).clone()) == y.al
                        }
                        SpanKind::SU => {
                            let w = b_cat
                                .hcomp2(
                                    &b_cat.hcomp2(&u.on_two[gamma], b_cat.vid(k)).clone(),
                                    phi,
                                )
                                .clone();
                            *b_cat.vcomp(&y.al, &w) == x.al
                        }
                    };
                    if ok {
                        twos.push(Two {
                            name: stwo(phi, gamma, &x.name),
                            phi: phi.clone(),
                            gamma: gamma.clone(),
                            src: x.name.clone(),
                            tgt: y.name.clone(),
                        });
                    }
                }
            }
        }
    }

    let one_index: BTreeMap<Name, usize> = ones
        .iter()
        .enumerate()
        .map(|(i, c)| (c.name.clone(), i))
        .collect();
    let mut homs = BTreeMap::new();
    for s in &objects {
        for t in &objects {
            let local: Vec<&One> = ones.iter().filter(|c| c.src == *s && c.tgt == *t).collect();
            let local_twos: Vec<&Two> = twos
                .iter()
                .filter(|w| {
                    let c = &ones[one_index[&w.src]];
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
            let mut identity = BTreeMap::new();
            for c in &local {
                let vg = match kind {
                    SpanKind::SU => u.dom.vid(&c.g).clone(),
                    _ => b_cat.vid(&c.g).clone(),
                };
                identity.insert(c.name.clone(), stwo(b_cat.vid(&c.f), &vg, &c.name));
            }
            let mut comp = BTreeMap::new();
            for w2 in &local_twos {
                for w1 in &local_twos {
                    if w1.tgt != w2.src {
                        continue;
                    }
                    let phic = match kind {
                        SpanKind::S2 => b_cat.vcomp(&w1.phi, &w2.phi).clone(),
                        _ => b_cat.vcomp(&w2.phi, &w1.phi).clone(),
                    };
                    let gamc = match kind {
                        SpanKind::SU => u.dom.vcomp(&w2.gamma, &w1.gamma).clone(),
                        _ => b_cat.vcomp(&w2.gamma, &w1.gamma).clone(),
                    };
                    comp.insert(
                        (w2.name.clone(), w1.name.clone()),
                        stwo(&phic, &gamc, &w1.src),
                    );
                }
            }
            let objs: Vec<Name> = local.iter().map(|c| c.name.clone()).collect();
            homs.insert(
                (s.clone(), t.clone()),
                crate::cat::FinCat::new_unchecked(objs, arrows, identity, comp),
            );
        }
    }

    let mut unit1 = BTreeMap::new();
    for (o, (sa, k)) in &legs {
        let (kb, ka) = b_cat.ends1(k).clone();
        let f_id = b_cat.unit1(&kb).clone();
        let g_id = match kind {
            SpanKind::SU => u.dom.unit1(sa).clone(),
            _ => b_cat.unit1(&ka).clone(),
        };
        unit1.insert(o.clone(), sone(&f_id, &g_id, b_cat.vid(k), k, k));
    }

    let mut hcomp1 = BTreeMap::new();
    for c2 in &ones {
        for c1 in &ones {
            if c1.tgt != c2.src {
                continue;
            }
            let k = &legs[&c1.src].1;
            let kpp = &legs[&c2.tgt].1;
            let (fc, gc, delta) = match kind {
                SpanKind::S1 => {
                    let fc = b_cat.hcomp1(&c1.f, &c2.f).clone();
                    let gc = b_cat.hcomp1(&c2.g, &c1.g).clone();
                    let inner = b_cat
                        .hcomp2(
                            &b_cat.hcomp2(b_cat.vid(&c2.g), &c1.al).clone(),
                            b_cat.vid(&c2.f),
                        )
                        .clone();
                    (fc, gc, b_cat.vcomp(&inner, &c2.al).clone())
                }
                SpanKind::S2 => {
                    let fc = b_cat.hcomp1(&c2.f, &c1.f).clone();
                    let gc = b_cat.hcomp1(&c2.g, &c1.g).clone();
                    let step1 = b_cat.hcomp2(&c2.al, b_cat.vid(&c1.f)).clone();
                    let step2 = b_cat.hcomp2(b_cat.vid(&c2.g), &c1.al).clone();
                    (fc, gc, b_cat.vcomp(&step2, &step1).clone())
                }
                SpanKind::SU => {
                    let fc = b_cat.hcomp1(&c1.f, &c2.f).clone();
                    let gc = u.dom.hcomp1(&c2.g, &c1.g).clone();
                    let inner = b_cat
                        .hcomp2(
                            &b_cat
                                .hcomp2(b_cat.vid(&u.on_one[&c2.g]), &c1.al)
                                .clone(),
                            b_cat.vid(&c2.f),
                        )
                        .clone();
                    (fc, gc, b_cat.vcomp(&c2.al, &inner).clone())
                }
            };
            hcomp1.insert(
                (c2.name.clone(), c1.name.clone()),
                sone(&fc, &gc, &delta, k, kpp),
            );
        }
    }

    let mut hcomp2 = BTreeMap::new();
    for w2 in &twos {
        let y1 = &ones[one_index[&w2.src]];
        for w1 in &twos {
            let x1 = &ones[one_index[&w1.src]];
            if x1.tgt != y1.src {
                continue;
            }
            let phic = match kind {
                SpanKind::S1 | SpanKind::SU => b_cat.hcomp2(&w1.phi, &w2.phi).clone(),
                SpanKind::S2 => b_cat.hcomp2(&w2.phi, &w1.phi).clone(),
            };
            let gamc = match kind {
                SpanKind::SU => u.dom.hcomp2(&w2.gamma, &w1.gamma).clone(),
                _ => b_cat.hcomp2(&w2.gamma, &w1.gamma).clone(),
            };
            let srcc = hcomp1[&(w2.src.clone(), w1.src.clone())].clone();
            hcomp2.insert((w2.name.clone(), w1.name.clone()), stwo(&phic, &gamc, &srcc));
        }
    }

    Ok(Arc::new(TwoCat::new(objects, homs, unit1, hcomp1, hcomp2)?))
}

fn span_projection(
    kind: SpanKind,
    u: &StrictTwoFunctor,
    span: &Arc<TwoCat>,
    left: bool,
) -> Result<StrictTwoFunctor> {
    let b_cat = &u.cod;
    let cod: Arc<TwoCat> = match (kind, left) {
        (SpanKind::S1, true) | (SpanKind::SU, true) => Arc::new(b_cat.dual(DualKind::Op)),
        (SpanKind::S2, true) => Arc::new(b_cat.dual(DualKind::Co)),
        (SpanKind::SU, false) => u.dom.clone(),
        (_, false) => b_cat.clone(),
    };
    let on_obj: BTreeMap<Name, Name> = span
        .objects()
        .iter()
        .map(|o| {
            let k = sob_k(o);
            let (kb, ka) = b_cat.ends1(&k).clone();
            let img = if left {
                kb
            } else {
                match (kind, o) {
                    (SpanKind::SU, Name::Node("sob", p)) => p[0].clone(),
                    _ => ka,
                }
            };
            (o.clone(), img)
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = span
        .one_cells()
        .map(|(c, _)| {
            let (f, g, _, _, _) = sone_parts(c);
            (c.clone(), if left { f } else { g })
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = span
        .two_cells()
        .map(|(c, _)| {
            let (phi, gamma, _) = stwo_parts(c);
            (c.clone(), if left { phi } else { gamma })
        })
        .collect();
    StrictTwoFunctor::new(span.clone(), cod, on_obj, on_one, on_two)
}

/// Unique integration 1-cell with given endpoints, base part and underlying
/// slice-1-cell components.
fn find_int_one(
    tc: &TwoCat,
    src: &Name,
    tgt: &Name,
    base_part: &Name,
    slice_f: &Name,
    slice_al: &Name,
) -> Result<Name> {
    let mut hits = Vec::new();
    for c in tc.hom(src, tgt).objects() {
        if let Name::Node("ione", p) = c {
            if &p[0] != base_part {
                continue;
            }
            if let Name::Node("one", q) = &p[1] {
                if &q[0] == slice_f && &q[1] == slice_al {
                    hits.push(c.clone());
                }
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        n => Err(Error::Mismatch {
            what: "canonical map",
            detail: format!(
                "expected exactly one integration 1-cell ({base_part}; {slice_f}, {slice_al}) from {src} to {tgt}, found {n}"
            ),
        }),
    }
}

/// Unique integration 2-cell with given parallel 1-cells, base 2-cell and
/// underlying slice 2-cell.
fn find_int_two(
    tc: &TwoCat,
    src1: &Name,
    tgt1: &Name,
    base_two: &Name,
    slice_beta: &Name,
) -> Result<Name> {
    let (s, t) = tc.ends1(src1).clone();
    let mut hits = Vec::new();
    for ar in tc.hom(&s, &t).arrows() {
        if ar.src != *src1 || ar.tgt != *tgt1 {
            continue;
        }
        if let Name::Node("itwo", p) = &ar.name {
            if &p[0] != base_two {
                continue;
            }
            if let Name::Node("two", q) = &p[1] {
                if &q[2] == slice_beta {
                    hits.push(ar.name.clone());
                }
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        n => Err(Error::Mismatch {
            what: "canonical map",
            detail: format!(
                "expected exactly one integration 2-cell ({base_two}; {slice_beta}) on {src1}, found {n}"
            ),
        }),
    }
}

fn find_slice_one(
    tc: &TwoCat,
    src: &Name,
    tgt: &Name,
    f_part: &Name,
    al_part: &Name,
) -> Result<Name> {
    let mut hits = Vec::new();
    for c in tc.hom(src, tgt).objects() {
        if let Name::Node("one", p) = c {
            if &p[0] == f_part && &p[1] == al_part {
                hits.push(c.clone());
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        n => Err(Error::Mismatch {
            what: "fiber identification",
            detail: format!("expected one slice 1-cell ({f_part},{al_part}) from {src} to {tgt}, found {n}"),
        }),
    }
}

fn find_slice_two(tc: &TwoCat, src1: &Name, tgt1: &Name, beta: &Name) -> Result<Name> {
    let (s, t) = tc.ends1(src1).clone();
    let mut hits = Vec::new();
    for ar in tc.hom(&s, &t).arrows() {
        if ar.src != *src1 || ar.tgt != *tgt1 {
            continue;
        }
        if let Name::Node("two", p) = &ar.name {
            if &p[2] == beta {
                hits.push(ar.name.clone());
            }
        }
    }
    match hits.len() {
        1 => Ok(hits.pop().unwrap()),
        n => Err(Error::Mismatch {
            what: "fiber identification",
            detail: format!("expected one slice 2-cell ({beta}) on {src1}, found {n}"),
        }),
    }
}

/// Slice-valued diagram: fibers are slices of `slice_of` over `ix(a)` for
/// each object `a` of `base`, transitions are whiskering transitions.
struct Reindex<'a> {
    obj: &'a BTreeMap<Name, Name>,
    one: &'a BTreeMap<Name, Name>,
    two: &'a BTreeMap<Name, Name>,
}

#[allow(clippy::too_many_arguments)]
fn slice_diagram(
    slice_of: &StrictTwoFunctor,
    kind: SliceKind,
    base: Arc<TwoCat>,
    ix: Option<Reindex<'_>>,
    fiber_dual: Option<DualKind>,
    variant: IntVariant,
) -> Result<(TwoDiagram, BTreeMap<Name, Slice>)> {
    let b_cat = &slice_of.cod;
    let lax = slice_of.as_lax();
    let colax = slice_of.as_colax();
    let get = |b: &Name| -> Result<Slice> {
        match kind {
            SliceKind::TrancheLax => tranche_lax(&lax, b),
            SliceKind::TrancheColax | SliceKind::OpTrancheColax => {
                slice_variant(SliceFunctor::Colax(&colax), b, kind)
            }
            SliceKind::OpTrancheLax => slice_variant(SliceFunctor::Lax(&lax), b, kind),
        }
    };
    let ix_obj = |a: &Name| -> Name {
        match &ix {
            Some(r) => r.obj[a].clone(),
            None => a.clone(),
        }
    };
    let ix_one = |f: &Name| -> Name {
        match &ix {
            Some(r) => r.one[f].clone(),
            None => f.clone(),
        }
    };
    let ix_two = |t: &Name| -> Name {
        match &ix {
            Some(r) => r.two[t].clone(),
            None => t.clone(),
        }
    };

    let mut slices = BTreeMap::new();
    let mut at = BTreeMap::new();
    for a in base.objects() {
        let s = get(&ix_obj(a))?;
        let fib = match fiber_dual {
            None => s.twocat.clone(),
            Some(d) => Arc::new(s.twocat.dual(d)),
        };
        at.insert(a.clone(), fib);
        slices.insert(a.clone(), s);
    }

    let mut one = BTreeMap::new();
    for (p, (pa, pb)) in base.one_cells() {
        let bp = ix_one(p);
        let t = transition_tables(slice_of, kind, &bp)?;
        // orient the functor along the base 1-cell, per the diagram's variance
        let (dom_a, cod_a) = match variant {
            IntVariant::Plain | IntVariant::Co => (pa.clone(), pb.clone()),
            IntVariant::Op => (pb.clone(), pa.clone()),
        };
        one.insert(
            p.clone(),
            StrictTwoFunctor {
                dom: at[&dom_a].clone(),
                cod: at[&cod_a].clone(),
                on_obj: t.0,
                on_one: t.1,
                on_two: t.2,
            },
        );
    }

    let mut two = BTreeMap::new();
    for (g, _) in base.two_cells() {
        let bg = ix_two(g);
        // component indexed by the objects of the transformation's domain
        // functor, which is one(vsrc g) or one(vtgt g) depending on variance
        let from_one = match variant {
            IntVariant::Plain | IntVariant::Op => base.vsrc(g).clone(),
            IntVariant::Co => base.vtgt(g).clone(),
        };
        let dom_tc = one[&from_one].dom.clone();
        let comp: BTreeMap<Name, Name> = dom_tc
            .objects()
            .iter()
            .map(|x| {
                (
                    x.clone(),
                    transition_component(b_cat, kind, &bg, x, variant),
                )
            })
            .collect();
        two.insert(g.clone(), comp);
    }
    Ok((
        TwoDiagram {
            base,
            variant,
            at,
            one,
            two,
        },
        slices,
    ))
}

type Tables = (
    BTreeMap<Name, Name>,
    BTreeMap<Name, Name>,
    BTreeMap<Name, Name>,
);

/// Whiskering transition on slices of a strict functor along `p`, as raw
/// tables (over-slices postcompose, under-slices precompose).
fn transition_tables(u: &StrictTwoFunctor, kind: SliceKind, p: &Name) -> Result<Tables> {
    let b_cat = &u.cod;
    let (pb, pbp) = b_cat.ends1(p).clone();
    let lax = u.as_lax();
    let colax = u.as_colax();
    let from_b = if kind.is_over() { pb } else { pbp };
    let from = match kind {
        SliceKind::TrancheLax => tranche_lax(&lax, &from_b)?,
        SliceKind::TrancheColax | SliceKind::OpTrancheColax => {
            slice_variant(SliceFunctor::Colax(&colax), &from_b, kind)?
        }
        SliceKind::OpTrancheLax => slice_variant(SliceFunctor::Lax(&lax), &from_b, kind)?,
    };
    let on_obj: BTreeMap<Name, Name> = from
        .twocat
        .objects()
        .iter()
        .map(|o| {
            let (a, q) = slice::ob_parts(o);
            let nq = if kind.is_over() {
                b_cat.hcomp1(p, &q).clone()
            } else {
                b_cat.hcomp1(&q, p).clone()
            };
            (o.clone(), ob_name(&a, &nq))
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = from
        .twocat
        .one_cells()
        .map(|(c, _)| {
            let (f, al, slot) = slice::one_parts(c);
            let nal = if kind.is_over() {
                b_cat.whisker_l(p, &al)
            } else {
                b_cat.whisker_r(&al, p)
            };
            let nslot = if kind.is_over() {
                b_cat.hcomp1(p, &slot).clone()
            } else {
                b_cat.hcomp1(&slot, p).clone()
            };
            (c.clone(), slice::one_name(&f, &nal, &nslot))
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = from
        .twocat
        .two_cells()
        .map(|(c, _)| {
            let (x, y, beta) = slice::two_cell_parts(c);
            (
                c.clone(),
                slice::two_name(&on_one[&x], &on_one[&y], &beta),
            )
        })
        .collect();
    Ok((on_obj, on_one, on_two))
}

/// Component 1-cell of the transformation between transitions induced by a
/// base 2-cell `gamma`, at a slice object, oriented per the diagram variance.
fn transition_component(
    b_cat: &Arc<TwoCat>,
    kind: SliceKind,
    gamma: &Name,
    at: &Name,
    variant: IntVariant,
) -> Name {
    let (a, q) = slice::ob_parts(at);
    let p = b_cat.vsrc(gamma).clone();
    let pp = b_cat.vtgt(gamma).clone();
    // the slice 1-cell component has f = 1_a and alpha the evident whisker;
    // slots per slice kind
    match (kind, variant) {
        // over-slices: alpha = gamma * q; the slot differs by slice flavor
        (SliceKind::TrancheLax, _) => {
            let al = b_cat.whisker_r(gamma, &q);
            tl_component(b_cat, &a, &al, &b_cat.hcomp1(&pp, &q).clone())
        }
        (SliceKind::TrancheColax, _) => {
            // colax slice 1-cell (x,q)->(x',q'): (f, alpha: q' * f => q);
            // component (a, p'q) -> (a, pq) has alpha: (pq)*1 => p'q
            let al = b_cat.whisker_r(gamma, &q);
            tl_component(b_cat, &a, &al, &b_cat.hcomp1(&p, &q).clone())
        }
        (SliceKind::OpTrancheLax, _) => {
            let al = b_cat.whisker_l(&q, gamma);
            tl_component(b_cat, &a, &al, &b_cat.hcomp1(&q, &pp).clone())
        }
        (SliceKind::OpTrancheColax, _) => {
            let al = b_cat.whisker_l(&q, gamma);
            tl_component(b_cat, &a, &al, &b_cat.hcomp1(&q, &p).clone())
        }
    }
}

fn tl_component(b_cat: &Arc<TwoCat>, a: &Name, al: &Name, slot: &Name) -> Name {
    // the component's f-part is the identity 1-cell of the a-part, which lives
    // in the slice's DOMAIN 2-category; for slices of id this is b_cat itself,
    // and for S(u) diagrams the a-part is an object of the same codomain
    slice::one_name(b_cat.unit1(a), al, slot)
}

/// Builds S1(A), certifies both canonical isomorphisms and the fiber
/// identifications, and returns the span.
pub fn s1(a: &Arc<TwoCat>) -> Result<SSpan> {
    let id = StrictTwoFunctor::identity(a.clone());
    let span = build_span(SpanKind::S1, &id)?;
    let left = span_projection(SpanKind::S1, &id, &span, true)?;
    let right = span_projection(SpanKind::S1, &id, &span, false)?;

    // second form: int^co over A of (TrancheLax(-,x))^op
    {
        let (diag, _) = slice_diagram(
            &id,
            SliceKind::TrancheLax,
            a.clone(),
            None,
            Some(DualKind::Op),
            IntVariant::Co,
        )?;
        let integ = int2(&diag)?;
        let map = span_to_integration(
            &span,
            &integ.twocat,
            |k| {
                let (kb, ka) = a.ends1(k).clone();
                iob(&ka, &ob_name(&kb, k))
            },
            |f, g, al, _k, _kp| (g.clone(), f.clone(), al.clone()),
            |phi, gamma| (gamma.clone(), phi.clone()),
        )?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s1",
                detail: "map onto the lax-slice integration is not an iso".into(),
            });
        }
    }
    // first form: int^co over A^op of OpTrancheLax(-,x)
    {
        let (diag, _) = slice_diagram(
            &id,
            SliceKind::OpTrancheLax,
            Arc::new(a.dual(DualKind::Op)),
            None,
            None,
            IntVariant::Co,
        )?;
        let integ = int2(&diag)?;
        let map = span_to_integration(
            &span,
            &integ.twocat,
            |k| {
                let (kb, ka) = a.ends1(k).clone();
                iob(&kb, &ob_name(&ka, k))
            },
            |f, g, al, _k, _kp| (f.clone(), g.clone(), al.clone()),
            |phi, gamma| (phi.clone(), gamma.clone()),
        )?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s1",
                detail: "map onto the oplax-slice integration is not an iso".into(),
            });
        }
    }
    s1_fibers(a, &id, &span)?;
    Ok(SSpan {
        twocat: span,
        left,
        right,
    })
}

/// Generic span -> integration comparison: objects by `on_ob`, 1-cells by
/// rearranging `(f,g,alpha)` into `(base part, slice f-part, slice alpha)`,
/// 2-cells by rearranging `(phi,gamma)` into `(base 2-cell, slice beta)`.
fn span_to_integration(
    span: &Arc<TwoCat>,
    integ: &Arc<TwoCat>,
    on_ob: impl Fn(&Name) -> Name,
    on_one_parts: impl Fn(&Name, &Name, &Name, &Name, &Name) -> (Name, Name, Name),
    on_two_parts: impl Fn(&Name, &Name) -> (Name, Name),
) -> Result<StrictTwoFunctor> {
    let mut on_obj = BTreeMap::new();
    for o in span.objects() {
        on_obj.insert(o.clone(), on_ob(&sob_k(o)));
    }
    let mut on_one = BTreeMap::new();
    for (c, _) in span.one_cells() {
        let (f, g, al, k, kp) = sone_parts(c);
        let (base_part, slice_f, slice_al) = on_one_parts(&f, &g, &al, &k, &kp);
        let (s, t) = span.ends1(c).clone();
        let img = find_int_one(
            integ,
            &on_obj[&s],
            &on_obj[&t],
            &base_part,
            &slice_f,
            &slice_al,
        )?;
        on_one.insert(c.clone(), img);
    }
    let mut on_two = BTreeMap::new();
    for (c, _) in span.two_cells() {
        let (phi, gamma, src1) = stwo_parts(c);
        let tgt1 = {
            let (x, y) = span.ends2(c).clone();
            span.hom(&x, &y).arrow(c).unwrap().tgt.clone()
        };
        let (base_two, beta) = on_two_parts(&phi, &gamma);
        let img = find_int_two(integ, &on_one[&src1], &on_one[&tgt1], &base_two, &beta)?;
        on_two.insert(c.clone(), img);
    }
    StrictTwoFunctor::new(span.clone(), integ.clone(), on_obj, on_one, on_two)
}

/// fiber(s1, a) = OpTrancheLax(A,-,a) and fiber(t1, a) = TrancheLax(A,-,a)^op,
/// certified per object.
fn s1_fibers(a: &Arc<TwoCat>, id: &StrictTwoFunctor, span: &Arc<TwoCat>) -> Result<()> {
    let _ = span;
    let s1p = span_projection(SpanKind::S1, id, &build_span(SpanKind::S1, id)?, true)?;
    let t1p = span_projection(SpanKind::S1, id, &s1p.dom.clone(), false)?;
    let lax = id.as_lax();
    for x in a.objects() {
        // left fiber: 1-cells out of x
        let fib = slice::fiber(&s1p, x)?;
        let target = slice_variant(SliceFunctor::Lax(&lax), x, SliceKind::OpTrancheLax)?;
        let map = fiber_to_slice(a, &fib, &target.twocat, false)?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s1 fiber",
                detail: format!("fiber of s1 over {x} is not the oplax slice"),
            });
        }
        // right fiber: 1-cells into x, as the op-dual of the lax slice
        let fib = slice::fiber(&t1p, x)?;
        let tl = tranche_lax(&lax, x)?;
        let target = Arc::new(tl.twocat.dual(DualKind::Op));
        let map = fiber_to_slice(a, &fib, &target, true)?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s1 fiber",
                detail: format!("fiber of t1 over {x} is not the op-dual lax slice"),
            });
        }
    }
    Ok(())
}

/// Maps a span fiber onto a slice 2-category: objects `sob(k)` to `ob(end,k)`,
/// 1-cells by their `(moving part, alpha)`, 2-cells by their underlying cell.
fn fiber_to_slice(
    a: &Arc<TwoCat>,
    fib: &Arc<TwoCat>,
    target: &Arc<TwoCat>,
    moving_is_f: bool,
) -> Result<StrictTwoFunctor> {
    let mut on_obj = BTreeMap::new();
    for o in fib.objects() {
        let k = sob_k(o);
        let (kb, ka) = a.ends1(&k).clone();
        let end = if moving_is_f { kb } else { ka };
        on_obj.insert(o.clone(), ob_name(&end, &k));
    }
    let mut on_one = BTreeMap::new();
    for (c, _) in fib.one_cells() {
        let (f, g, al, _, _) = sone_parts(c);
        let moving = if moving_is_f { f } else { g };
        let (s, t) = fib.ends1(c).clone();
        let img = find_slice_one(target, &on_obj[&s], &on_obj[&t], &moving, &al)?;
        on_one.insert(c.clone(), img);
    }
    let mut on_two = BTreeMap::new();
    for (c, _) in fib.two_cells() {
        let (phi, gamma, src1) = stwo_parts(c);
        let moving = if moving_is_f { phi } else { gamma };
        let tgt1 = {
            let (x, y) = fib.ends2(c).clone();
            fib.hom(&x, &y).arrow(c).unwrap().tgt.clone()
        };
        let img = find_slice_two(target, &on_one[&src1], &on_one[&tgt1], &moving)?;
        on_two.insert(c.clone(), img);
    }
    StrictTwoFunctor::new(fib.clone(), target.clone(), on_obj, on_one, on_two)
}

/// Builds S2(A) and certifies its isomorphisms and fiber identifications.
pub fn s2(a: &Arc<TwoCat>) -> Result<SSpan> {
    let id = StrictTwoFunctor::identity(a.clone());
    let span = build_span(SpanKind::S2, &id)?;
    let left = span_projection(SpanKind::S2, &id, &span, true)?;
    let right = span_projection(SpanKind::S2, &id, &span, false)?;

    // second form: int^co over A of (TrancheCoLax(-,x))^co
    {
        let (diag, _) = slice_diagram(
            &id,
            SliceKind::TrancheColax,
            a.clone(),
            None,
            Some(DualKind::Co),
            IntVariant::Co,
        )?;
        let integ = int2(&diag)?;
        let map = span_to_integration(
            &span,
            &integ.twocat,
            |k| {
                let (kb, ka) = a.ends1(k).clone();
                iob(&ka, &ob_name(&kb, k))
            },
            |f, g, al, _k, _kp| (g.clone(), f.clone(), al.clone()),
            |phi, gamma| (gamma.clone(), phi.clone()),
        )?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s2",
                detail: "map onto the colax-slice integration is not an iso".into(),
            });
        }
    }
    // first form: op of (int^co over A^coop of (OpTrancheLax(-,x))^op)
    {
        let (diag, _) = slice_diagram(
            &id,
            SliceKind::OpTrancheLax,
            Arc::new(a.dual(DualKind::Coop)),
            None,
            Some(DualKind::Op),
            IntVariant::Co,
        )?;
        let integ = int2(&diag)?;
        let dualized = Arc::new(integ.twocat.dual(DualKind::Op));
        let map = span_to_integration(
            &span,
            &dualized,
            |k| {
                let (kb, ka) = a.ends1(k).clone();
                iob(&kb, &ob_name(&ka, k))
            },
            |f, g, al, _k, _kp| (f.clone(), g.clone(), al.clone()),
            |phi, gamma| (phi.clone(), gamma.clone()),
        )?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s2",
                detail: "map onto the op-dual oplax-slice integration is not an iso".into(),
            });
        }
    }
    // fibers: t2 over x = (TrancheCoLax(-,x))^co, s2 over x = OpTrancheLax(-,x)
    {
        let colax = id.as_colax();
        let laxid = id.as_lax();
        for x in a.objects() {
            let fib = slice::fiber(&right, x)?;
            let tc = slice_variant(SliceFunctor::Colax(&colax), x, SliceKind::TrancheColax)?;
            let target = Arc::new(tc.twocat.dual(DualKind::Co));
            let map = fiber_to_slice(a, &fib, &target, true)?;
            if !iso_check(&map)? {
                return Err(Error::Mismatch {
                    what: "s2 fiber",
                    detail: format!("fiber of t2 over {x} mismatch"),
                });
            }
            let fib = slice::fiber(&left, x)?;
            let target =
                slice_variant(SliceFunctor::Lax(&laxid), x, SliceKind::OpTrancheLax)?;
            let map = fiber_to_slice(a, &fib, &target.twocat, false)?;
            if !iso_check(&map)? {
                return Err(Error::Mismatch {
                    what: "s2 fiber",
                    detail: format!("fiber of s2 over {x} mismatch"),
                });
            }
        }
    }
    Ok(SSpan {
        twocat: span,
        left,
        right,
    })
}

/// Builds S(u), certifies its isomorphisms, fiber identifications, and that
/// both projections are precoopfibrations is left to callers (it is checked
/// instance-wise in the lemma suites).
pub fn s_span(u: &StrictTwoFunctor) -> Result<SSpan> {
    let span = build_span(SpanKind::SU, u)?;
    let left = span_projection(SpanKind::SU, u, &span, true)?;
    let right = span_projection(SpanKind::SU, u, &span, false)?;

    // first form: int over B^op of OpTrancheCoLax(A,u,b)
    {
        let (diag, _) = slice_diagram(
            u,
            SliceKind::OpTrancheColax,
            Arc::new(u.cod.dual(DualKind::Op)),
            None,
            None,
            IntVariant::Plain,
        )?;
        let integ = int2(&diag)?;
        // S(u) objects carry the extra a-part, so build the maps inline
        let mut on_obj = BTreeMap::new();
        for o in span.objects() {
            let (apart, k) = match o {
                Name::Node("sob", p) => (p[0].clone(), p[1].clone()),
                _ => unreachable!(),
            };
            let (kb, _) = u.cod.ends1(&k).clone();
            on_obj.insert(o.clone(), iob(&kb, &ob_name(&apart, &k)));
        }
        let mut on_one = BTreeMap::new();
        for (c, _) in span.one_cells() {
            let (f, g, al, _, _) = sone_parts(c);
            let (s, t) = span.ends1(c).clone();
            let img = find_int_one(&integ.twocat, &on_obj[&s], &on_obj[&t], &f, &g, &al)?;
            on_one.insert(c.clone(), img);
        }
        let mut on_two = BTreeMap::new();
        for (c, _) in span.two_cells() {
            let (phi, gamma, src1) = stwo_parts(c);
            let tgt1 = {
                let (x, y) = span.ends2(c).clone();
                span.hom(&x, &y).arrow(c).unwrap().tgt.clone()
            };
            let img = find_int_two(
                &integ.twocat,
                &on_one[&src1],
                &on_one[&tgt1],
                &phi,
                &gamma,
            )?;
            on_two.insert(c.clone(), img);
        }
        let map =
            StrictTwoFunctor::new(span.clone(), integ.twocat.clone(), on_obj, on_one, on_two)?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s_span",
                detail: "map onto the oplax-colax-slice integration is not an iso".into(),
            });
        }
    }
    // second form: int over A of (TrancheCoLax(B,-,u(a)))^op
    {
        let idb = StrictTwoFunctor::identity(u.cod.clone());
        let rx = Reindex {
            obj: &u.on_obj,
            one: &u.on_one,
            two: &u.on_two,
        };
        let (diag, _) = slice_diagram(
            &idb,
            SliceKind::TrancheColax,
            u.dom.clone(),
            Some(rx),
            Some(DualKind::Op),
            IntVariant::Plain,
        )?;
        let integ = int2(&diag)?;
        let mut on_obj = BTreeMap::new();
        for o in span.objects() {
            let (apart, k) = match o {
                Name::Node("sob", p) => (p[0].clone(), p[1].clone()),
                _ => unreachable!(),
            };
            let (kb, _) = u.cod.ends1(&k).clone();
            on_obj.insert(o.clone(), iob(&apart, &ob_name(&kb, &k)));
        }
        let mut on_one = BTreeMap::new();
        for (c, _) in span.one_cells() {
            let (f, g, al, _, _) = sone_parts(c);
            let (s, t) = span.ends1(c).clone();
            let img = find_int_one(&integ.twocat, &on_obj[&s], &on_obj[&t], &g, &f, &al)?;
            on_one.insert(c.clone(), img);
        }
        let mut on_two = BTreeMap::new();
        for (c, _) in span.two_cells() {
            let (phi, gamma, src1) = stwo_parts(c);
            let tgt1 = {
                let (x, y) = span.ends2(c).clone();
                span.hom(&x, &y).arrow(c).unwrap().tgt.clone()
            };
            let img = find_int_two(
                &integ.twocat,
                &on_one[&src1],
                &on_one[&tgt1],
                &gamma,
                &phi,
            )?;
            on_two.insert(c.clone(), img);
        }
        let map =
            StrictTwoFunctor::new(span.clone(), integ.twocat.clone(), on_obj, on_one, on_two)?;
        if !iso_check(&map)? {
            return Err(Error::Mismatch {
                what: "s_span",
                detail: "map onto the colax-slice integration over A is not an iso".into(),
            });
        }
    }
    // fiber of t_u over a = (TrancheCoLax(B,-,u(a)))^op;
    // fiber of s_u over b = OpTrancheCoLax(A,u,b)
    {
        let idb = StrictTwoFunctor::identity(u.cod.clone());
        let colaxb = idb.as_colax();
        for a in u.dom.objects() {
            let fib = slice::fiber(&right, a)?;
            let tc = slice_variant(
                SliceFunctor::Colax(&colaxb),
                &u.on_obj[a],
                SliceKind::TrancheColax,
            )?;
            let target = Arc::new(tc.twocat.dual(DualKind::Op));
            let map = su_fiber_map(u, &fib, &target, true)?;
            if !iso_check(&map)? {
                return Err(Error::Mismatch {
                    what: "s_span fiber",
                    detail: format!("fiber of t_u over {a} mismatch"),
                });
            }
        }
        let colaxu = u.as_colax();
        for b in u.cod.objects() {
            let fib = slice::fiber(&left, b)?;
            let target =
                slice_variant(SliceFunctor::Colax(&colaxu), b, SliceKind::OpTrancheColax)?;
            let map = su_fiber_map(u, &fib, &target.twocat, false)?;
            if !iso_check(&map)? {
                return Err(Error::Mismatch {
                    what: "s_span fiber",
                    detail: format!("fiber of s_u over {b} mismatch"),
                });
            }
        }
    }
    Ok(SSpan {
        twocat: span,
        left,
        right,
    })
}

fn su_fiber_map(
    u: &StrictTwoFunctor,
    fib: &Arc<TwoCat>,
    target: &Arc<TwoCat>,
    moving_is_f: bool,
) -> Result<StrictTwoFunctor> {
    let mut on_obj = BTreeMap::new();
    for o in fib.objects() {
        let (apart, k) = match o {
            Name::Node("sob", p) => (p[0].clone(), p[1].clone()),
            _ => unreachable!(),
        };
        let (kb, _) = u.cod.ends1(&k).clone();
        let end = if moving_is_f { kb } else { apart };
        on_obj.insert(o.clone(), ob_name(&end, &k));
    }
    let mut on_one = BTreeMap::new();
    for (c, _) in fib.one_cells() {
        let (f, g, al, _, _) = sone_parts(c);
        let moving = if moving_is_f { f } else { g };
        let (s, t) = fib.ends1(c).clone();
        let img = find_slice_one(target, &on_obj[&s], &on_obj[&t], &moving, &al)?;
        on_one.insert(c.clone(), img);
    }
    let mut on_two = BTreeMap::new();
    for (c, _) in fib.two_cells() {
        let (phi, gamma, src1) = stwo_parts(c);
        let moving = if moving_is_f { phi } else { gamma };
        let tgt1 = {
            let (x, y) = fib.ends2(c).clone();
            fib.hom(&x, &y).arrow(c).unwrap().tgt.clone()
        };
        let img = find_slice_two(target, &on_one[&src1], &on_one[&tgt1], &moving)?;
        on_two.insert(c.clone(), img);
    }
    StrictTwoFunctor::new(fib.clone(), target.clone(), on_obj, on_one, on_two)
}

/// The functor `S(v,w) : S(u) -> S(u')` induced by a commutative square
/// `u' . v = w . u`, with the commuting-span check.
pub struct SpanOfFunctor {
    pub map: StrictTwoFunctor,
}

pub fn s_functorial(
    u: &StrictTwoFunctor,
    uprime: &StrictTwoFunctor,
    v: &StrictTwoFunctor,
    w: &StrictTwoFunctor,
) -> Result<SpanOfFunctor> {
    // square: v : A -> A', w : B -> B', u : A -> B... u' . v = w . u
    let lhs = uprime.compose(v)?;
    let rhs = w.compose(u)?;
    if lhs != rhs {
        return Err(Error::Mismatch {
            what: "s_functorial",
            detail: "square does not commute".into(),
        });
    }
    let dom = s_span(u)?;
    let cod = s_span(uprime)?;
    let on_obj: BTreeMap<Name, Name> = dom
        .twocat
        .objects()
        .iter()
        .map(|o| {
            let (apart, k) = match o {
                Name::Node("sob", p) => (p[0].clone(), p[1].clone()),
                _ => unreachable!(),
            };
            (o.clone(), sob(Some(&v.on_obj[&apart]), &w.on_one[&k]))
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = dom
        .twocat
        .one_cells()
        .map(|(c, _)| {
            let (f, g, al, k, kp) = sone_parts(c);
            (
                c.clone(),
                sone(
                    &w.on_one[&f],
                    &v.on_one[&g],
                    &w.on_two[&al],
                    &w.on_one[&k],
                    &w.on_one[&kp],
                ),
            )
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = dom
        .twocat
        .two_cells()
        .map(|(c, _)| {
            let (phi, gamma, src1) = stwo_parts(c);
            (
                c.clone(),
                stwo(&w.on_two[&phi], &v.on_two[&gamma], &on_one[&src1]),
            )
        })
        .collect();
    let map = StrictTwoFunctor::new(dom.twocat.clone(), cod.twocat.clone(), on_obj, on_one, on_two)?;
    // the squares with the span projections commute
    let sq1 = cod.left.compose(&map)?;
    let sq1b = w.dual(DualKind::Op).compose(&dom.left)?;
    let sq2 = cod.right.compose(&map)?;
    let sq2b = v.compose(&dom.right)?;
    if sq1.on_obj != sq1b.on_obj || sq1.on_one != sq1b.on_one || sq1.on_two != sq1b.on_two {
        return Err(Error::Mismatch {
            what: "s_functorial",
            detail: "left projection square does not commute".into(),
        });
    }
    if sq2.on_obj != sq2b.on_obj || sq2.on_one != sq2b.on_one || sq2.on_two != sq2b.on_two {
        return Err(Error::Mismatch {
            what: "s_functorial",
            detail: "right projection square does not commute".into(),
        });
    }
    Ok(SpanOfFunctor { map })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;
    use crate::twocat::{from_cat, terminal};

    #[test]
    fn s1_of_point_is_point() {
        let e = Arc::new(terminal());
        let s = s1(&e).unwrap();
        assert_eq!(s.twocat.objects().len(), 1);
        assert_eq!(s.twocat.one_count(), 1);
        assert_eq!(s.twocat.two_count(), 1);
    }

    #[test]
    fn s1_objects_are_one_cells() {
        let a = Arc::new(from_cat(&ordinal(1)));
        let s = s1(&a).unwrap();
        assert_eq!(s.twocat.objects().len(), a.one_count());
        assert!(s.left.validate().is_empty());
        assert!(s.right.validate().is_empty());
    }

    #[test]
    fn s2_objects_are_one_cells() {
        let a = Arc::new(from_cat(&ordinal(1)));
        let s = s2(&a).unwrap();
        assert_eq!(s.twocat.objects().len(), a.one_count());
    }

    #[test]
    fn s_span_of_identity() {
        let a = Arc::new(from_cat(&ordinal(1)));
        let id = StrictTwoFunctor::identity(a.clone());
        let s = s_span(&id).unwrap();
        assert_eq!(s.twocat.objects().len(), a.one_count());
    }

    #[test]
    fn s_functorial_identity_square() {
        let a = Arc::new(from_cat(&ordinal(1)));
        let id = StrictTwoFunctor::identity(a.clone());
        let sf = s_functorial(&id, &id, &id, &id).unwrap();
        assert!(sf.map.validate().is_empty());
    }
}
