//! Slice 2-categories in four dual flavors, fibers, and the predicates
//! built on them: objects admitting final/initial objects, preadjoints,
//! prefibrations.
//!
//! Only the lax slice is constructed from scratch. The other three variants
//! are produced by the duality formulas
//! `optranche_lax = (tranche_lax(A^op, u^op, b))^op`,
//! `tranche_colax = (tranche_lax(A^co, u^co, b))^co`,
//! `optranche_colax = (tranche_colax(A^op, u^op, b))^op`,
//! and every call cross-checks the formula output against an independent
//! direct construction, cell-for-cell.
//!
//! Naming: slice objects are `ob(a,p)`; slice 1-cells are `one(f,alpha,slot)`
//! where `slot` is the target leg for the over-slices and the source leg for
//! the under-slices; slice 2-cells are `two(x,y,beta)` with `x,y` ordered so
//! that the duality formulas reproduce the direct names exactly.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::FinCat;
use crate::error::{Error, Result};
use crate::functor::{ColaxTwoFunctor, LaxTwoFunctor, StrictTwoFunctor};
use crate::name::Name;
use crate::twocat::{DualKind, TwoCat};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SliceKind {
    TrancheLax,
    OpTrancheLax,
    TrancheColax,
    OpTrancheColax,
}

impl SliceKind {
    pub fn parse(s: &str) -> Option<SliceKind> {
        match s {
            "lax" | "tranche-lax" => Some(SliceKind::TrancheLax),
            "oplax" | "optranche-lax" => Some(SliceKind::OpTrancheLax),
            "colax" | "tranche-colax" => Some(SliceKind::TrancheColax),
            "opcolax" | "optranche-colax" => Some(SliceKind::OpTrancheColax),
            _ => None,
        }
    }

    /// Over-slices (legs into b) vs under-slices (legs out of b).
    pub fn is_over(self) -> bool {
        matches!(self, SliceKind::TrancheLax | SliceKind::TrancheColax)
    }
}

/// A slice 2-category together with its strict projection to the domain.
#[derive(Clone, Debug)]
pub struct Slice {
    pub twocat: Arc<TwoCat>,
    pub projection: StrictTwoFunctor,
}

pub fn ob_name(a: &Name, p: &Name) -> Name {
    Name::pair("ob", a.clone(), p.clone())
}

pub fn one_name(f: &Name, alpha: &Name, slot: &Name) -> Name {
    Name::node("one", vec![f.clone(), alpha.clone(), slot.clone()])
}

pub fn two_name(x: &Name, y: &Name, beta: &Name) -> Name {
    Name::node("two", vec![x.clone(), y.clone(), beta.clone()])
}

/// The lax slice of `dom(u)` over `b`, built directly.
pub fn tranche_lax(u: &LaxTwoFunctor, b: &Name) -> Result<Slice> {
    if !u.cod.has_object(b) {
        return Err(Error::Unknown {
            kind: "object",
            name: b.to_string(),
        });
    }
    let a_cat = &u.dom;
    let b_cat = &u.cod;

    // objects: (a, p : u(a) -> b)
    let mut objects = Vec::new();
    let mut legs: BTreeMap<Name, (Name, Name)> = BTreeMap::new(); // ob -> (a, p)
    for a in a_cat.objects() {
        for p in b_cat.hom(u.obj(a), b).objects() {
            let o = ob_name(a, p);
            legs.insert(o.clone(), (a.clone(), p.clone()));
            objects.push(o);
        }
    }

    // 1-cells (a,p) -> (a',p'): (f : a -> a', alpha : p => p' * u(f))
    // stored per ordered object pair, with all 2-cells between them
    struct OneCell {
        name: Name,
        f: Name,
        alpha: Name,
        src: Name,
        tgt: Name,
    }
    let mut ones: Vec<OneCell> = Vec::new();
    for (s, (a, p)) in &legs {
        for (t, (ap, pp)) in &legs {
            let homb = b_cat.hom(u.obj(a), b);
            for f in a_cat.hom(&a.clone(), &ap.clone()).objects() {
                let target_leg = b_cat.hcomp1(pp, u.one(f)).clone();
                for al in homb.arrows() {
                    if al.src == *p && al.tgt == target_leg {
                        ones.push(OneCell {
                            name: one_name(f, &al.name, pp),
                            f: f.clone(),
                            alpha: al.name.clone(),
                            src: s.clone(),
                            tgt: t.clone(),
                        });
                    }
                }
            }
        }
    }

    // hom categories: objects the 1-cells, arrows the slice 2-cells
    let mut homs: BTreeMap<(Name, Name), FinCat> = BTreeMap::new();
    let mut hcomp2: BTreeMap<(Name, Name), Name> = BTreeMap::new();
    let mut two_of: BTreeMap<(Name, Name), Vec<(Name, Name)>> = BTreeMap::new(); // (S,T) -> [(two-name, beta)]
    for s in &objects {
        for t in &objects {
            let local: Vec<&OneCell> = ones
                .iter()
                .filter(|c| c.src == *s && c.tgt == *t)
                .collect();
            let (a, p) = &legs[s];
            let (ap, pp) = &legs[t];
            let _ = p;
            let mut arrows = Vec::new();
            let mut identity = BTreeMap::new();
            for x in &local {
                for y in &local {
                    // beta : f => g with (p' * u(beta)) . alpha_x = alpha_y
                    for beta in a_cat.hom(a, ap).arrows() {
                        if beta.src != x.f || beta.tgt != y.f {
                            continue;
                        }
                        let lhs = b_cat
                            .vcomp(
                                &b_cat.whisker_l(pp, u.two(&beta.name)),
                                &x.alpha,
                            )
                            .clone();
                        if lhs == y.alpha {
                            let nm = two_name(&x.name, &y.name, &beta.name);
                            arrows.push(crate::cat::Arrow {
                                name: nm.clone(),
                                src: x.name.clone(),
                                tgt: y.name.clone(),
                            });
                            two_of
                                .entry((s.clone(), t.clone()))
                                .or_default()
                                .push((nm.clone(), beta.name.clone()));
                            if beta.src == beta.tgt && a_cat.hom(a, ap).is_identity(&beta.name) && x.name == y.name {
                                identity.insert(x.name.clone(), nm);
                            }
                        }
                    }
                }
            }
            let mut comp = BTreeMap::new();
            for a2 in &arrows {
                for a1 in &arrows {
                    if a1.tgt != a2.src {
                        continue;
                    }
                    let (b2, b1) = (two_beta(&a2.name), two_beta(&a1.name));
                    let bc = a_cat.hom(a, ap).comp(&b2, &b1).clone();
                    comp.insert(
                        (a2.name.clone(), a1.name.clone()),
                        two_name(&a1.src, &a2.tgt, &bc),
                    );
                }
            }
            let objs: Vec<Name> = local.iter().map(|c| c.name.clone()).collect();
            homs.insert(
                (s.clone(), t.clone()),
                FinCat::new_unchecked(objs, arrows, identity, comp),
            );
        }
    }

    // unit 1-cells
    let mut unit1 = BTreeMap::new();
    for (o, (a, p)) in &legs {
        let alpha = b_cat
            .vcomp(
                &b_cat.whisker_l(p, &u.unit_cell[a]),
                b_cat.vid(p),
            )
            .clone();
        unit1.insert(o.clone(), one_name(a_cat.unit1(a), &alpha, p));
    }

    // horizontal composition of 1-cells
    let mut hcomp1 = BTreeMap::new();
    for c2 in &ones {
        for c1 in &ones {
            if c1.tgt != c2.src {
                continue;
            }
            let (_, p_final) = &legs[&c2.tgt];
            let gf = a_cat.hcomp1(&c2.f, &c1.f).clone();
            let delta = {
                let step1 = &c1.alpha;
                let step2 = b_cat.whisker_r(&c2.alpha, u.one(&c1.f));
                let step3 =
                    b_cat.whisker_l(p_final, &u.comp_cell[&(c2.f.clone(), c1.f.clone())]);
                b_cat
                    .vcomp(&step3, &b_cat.vcomp(&step2, step1).clone())
                    .clone()
            };
            hcomp1.insert(
                (c2.name.clone(), c1.name.clone()),
                one_name(&gf, &delta, p_final),
            );
        }
    }

    // horizontal composition of 2-cells: underlying horizontal composition in A
    for ((s, t), cells1) in two_of.clone() {
        for ((s2, t2), cells2) in two_of.clone() {
            if s2 != t {
                continue;
            }
            let _ = t2;
            for (n2, b2) in &cells2 {
                for (n1, b1) in &cells1 {
                    let ba = a_cat.hcomp2(b2, b1).clone();
                    let (x2, y2) = two_ends(n2);
                    let (x1, y1) = two_ends(n1);
                    let sx = hcomp1[&(x2.clone(), x1.clone())].clone();
                    let tx = hcomp1[&(y2.clone(), y1.clone())].clone();
                    hcomp2.insert((n2.clone(), n1.clone()), two_name(&sx, &tx, &ba));
                }
            }
            let _ = s;
        }
    }

    let twocat = Arc::new(TwoCat::new(objects, homs, unit1, hcomp1, hcomp2)?);

    let projection = StrictTwoFunctor::new(
        twocat.clone(),
        u.dom.clone(),
        twocat
            .objects()
            .iter()
            .map(|o| (o.clone(), legs[o].0.clone()))
            .collect(),
        twocat
            .one_cells()
            .map(|(c, _)| (c.clone(), one_f(c)))
            .collect(),
        twocat
            .two_cells()
            .map(|(c, _)| (c.clone(), two_beta(c)))
            .collect(),
    )?;
    Ok(Slice { twocat, projection })
}

fn one_f(n: &Name) -> Name {
    match n {
        Name::Node("one", parts) => parts[0].clone(),
        _ => panic!("not a slice 1-cell name: {n}"),
    }
}

fn two_beta(n: &Name) -> Name {
    match n {
        Name::Node("two", parts) => parts[2].clone(),
        _ => panic!("not a slice 2-cell name: {n}"),
    }
}

fn two_ends(n: &Name) -> (Name, Name) {
    match n {
        Name::Node("two", parts) => (parts[0].clone(), parts[1].clone()),
        _ => panic!("not a slice 2-cell name: {n}"),
    }
}

/// Slot-respecting direct constructions for the three dual variants live in
/// `direct`; `slice_variant` builds the formula version and insists the two
/// agree cell-for-cell.
pub enum SliceFunctor<'a> {
    Lax(&'a LaxTwoFunctor),
    Colax(&'a ColaxTwoFunctor),
}

pub fn slice_variant(u: SliceFunctor<'_>, b: &Name, kind: SliceKind) -> Result<Slice> {
    let formula = match (kind, &u) {
        (SliceKind::TrancheLax, SliceFunctor::Lax(l)) => return tranche_lax(l, b),
        (SliceKind::OpTrancheLax, SliceFunctor::Lax(l)) => {
            let inner = tranche_lax(&l.op_dual(), b)?;
            dualize_slice(inner, DualKind::Op, &l.dom)
        }
        (SliceKind::TrancheColax, SliceFunctor::Colax(c)) => {
            let inner = tranche_lax(&c.co_dual(), b)?;
            dualize_slice(inner, DualKind::Co, &c.dom)
        }
        (SliceKind::OpTrancheColax, SliceFunctor::Colax(c)) => {
            let op = colax_op_dual(c);
            let inner = slice_variant(SliceFunctor::Colax(&op), b, SliceKind::TrancheColax)?;
            dualize_slice(inner, DualKind::Op, &c.dom)
        }
        _ => {
            return Err(Error::Mismatch {
                what: "slice",
                detail: "functor flavor does not match slice kind".into(),
            })
        }
    }?;
    let check = direct::build(&u, b, kind)?;
    if *formula.twocat != check.0 {
        return Err(Error::Mismatch {
            what: "slice duality formula",
            detail: format!("formula and direct construction differ over {b} ({kind:?})"),
        });
    }
    if formula.projection.on_obj != check.1.on_obj
        || formula.projection.on_one != check.1.on_one
        || formula.projection.on_two != check.1.on_two
    {
        return Err(Error::Mismatch {
            what: "slice projection",
            detail: format!("formula and direct projections differ over {b} ({kind:?})"),
        });
    }
    Ok(formula)
}

fn dualize_slice(inner: Slice, kind: DualKind, outer_dom: &Arc<TwoCat>) -> Result<Slice> {
    let twocat = Arc::new(inner.twocat.dual(kind));
    let projection = StrictTwoFunctor::new(
        twocat.clone(),
        outer_dom.clone(),
        inner.projection.on_obj.clone(),
        inner.projection.on_one.clone(),
        inner.projection.on_two.clone(),
    )?;
    Ok(Slice { twocat, projection })
}

/// The op-dual of a colax functor is colax, with composition cells transposed.
pub fn colax_op_dual(c: &ColaxTwoFunctor) -> ColaxTwoFunctor {
    ColaxTwoFunctor {
        dom: Arc::new(c.dom.dual(DualKind::Op)),
        cod: Arc::new(c.cod.dual(DualKind::Op)),
        on_obj: c.on_obj.clone(),
        on_one: c.on_one.clone(),
        on_two: c.on_two.clone(),
        comp_cell: c
            .comp_cell
            .iter()
            .map(|((fp, f), cell)| ((f.clone(), fp.clone()), cell.clone()))
            .collect(),
        unit_cell: c.unit_cell.clone(),
    }
}

mod direct {
    //! Independent constructions of the three dual slice variants, used to
    //! cross-check the duality formulas.

    use super::*;

    pub fn build(
        u: &SliceFunctor<'_>,
        b: &Name,
        kind: SliceKind,
    ) -> Result<(TwoCat, StrictTwoFunctor)> {
        let (a_cat, b_cat, on_obj, on_one, on_two, comp_cell, unit_cell): (
            &Arc<TwoCat>,
            &Arc<TwoCat>,
            &BTreeMap<Name, Name>,
            &BTreeMap<Name, Name>,
            &BTreeMap<Name, Name>,
            &BTreeMap<(Name, Name), Name>,
            &BTreeMap<Name, Name>,
        ) = match u {
            SliceFunctor::Lax(l) => (
                &l.dom,
                &l.cod,
                &l.on_obj,
                &l.on_one,
                &l.on_two,
                &l.comp_cell,
                &l.unit_cell,
            ),
            SliceFunctor::Colax(c) => (
                &c.dom,
                &c.cod,
                &c.on_obj,
                &c.on_one,
                &c.on_two,
                &c.comp_cell,
                &c.unit_cell,
            ),
        };
        let over = kind.is_over();

        // legs
        let mut objects = Vec::new();
        let mut legs: BTreeMap<Name, (Name, Name)> = BTreeMap::new();
        for a in a_cat.objects() {
            let hom = if over {
                b_cat.hom(&on_obj[a], b)
            } else {
                b_cat.hom(b, &on_obj[a])
            };
            for p in hom.objects() {
                let o = ob_name(a, p);
                legs.insert(o.clone(), (a.clone(), p.clone()));
                objects.push(o);
            }
        }

        struct OneCell {
            name: Name,
            f: Name,
            alpha: Name,
            src: Name,
            tgt: Name,
        }
        let mut ones: Vec<OneCell> = Vec::new();
        for (s, (a, p)) in &legs {
            for (t, (ap, pp)) in &legs {
                for f in a_cat.hom(a, ap).objects() {
                    let (al_src, al_tgt, slot) = match kind {
                        // alpha : p => p' * u(f)
                        SliceKind::TrancheLax => {
                            (p.clone(), b_cat.hcomp1(pp, &on_one[f]).clone(), pp)
                        }
                        // alpha : p' * u(f) => p
                        SliceKind::TrancheColax => {
                            (b_cat.hcomp1(pp, &on_one[f]).clone(), p.clone(), pp)
                        }
                        // alpha : p' => u(f) * p
                        SliceKind::OpTrancheLax => {
                            (pp.clone(), b_cat.hcomp1(&on_one[f], p).clone(), p)
                        }
                        // alpha : u(f) * p => p'
                        SliceKind::OpTrancheColax => {
                            (b_cat.hcomp1(&on_one[f], p).clone(), pp.clone(), p)
                        }
                    };
                    let hom = if over {
                        b_cat.hom(&on_obj[a], b)
                    } else {
                        b_cat.hom(b, &on_obj[ap])
                    };
                    for al in hom.arrows() {
                        if al.src == al_src && al.tgt == al_tgt {
                            ones.push(OneCell {
                                name: one_name(f, &al.name, slot),
                                f: f.clone(),
                                alpha: al.name.clone(),
                                src: s.clone(),
                                tgt: t.clone(),
                            });
                        }
                    }
                }
            }
        }

        let colaxish = matches!(kind, SliceKind::TrancheColax | SliceKind::OpTrancheColax);
        let mut homs: BTreeMap<(Name, Name), FinCat> = BTreeMap::new();
        let mut hcomp2: BTreeMap<(Name, Name), Name> = BTreeMap::new();
        let mut twos: Vec<(Name, Name, Name, Name, Name)> = Vec::new(); // (name, src1, tgt1, beta, pairkey-src)
        for s in &objects {
            for t in &objects {
                let local: Vec<&OneCell> =
                    ones.iter().filter(|c| c.src == *s && c.tgt == *t).collect();
                let (a, p) = &legs[s];
                let (ap, pp) = &legs[t];
                let mut arrows = Vec::new();
                let mut identity = BTreeMap::new();
                for x in &local {
                    for y in &local {
                        for beta in a_cat.hom(a, ap).arrows() {
                            if beta.src != x.f || beta.tgt != y.f {
                                continue;
                            }
                            let ok = match kind {
                                SliceKind::TrancheLax => {
                                    let lhs = b_cat
                                        .vcomp(&b_cat.whisker_l(pp, &on_two[&beta.name]), &x.alpha)
                                        .clone();
                                    lhs == y.alpha
                                }
                                SliceKind::TrancheColax => {
                                    let lhs = b_cat
                                        .vcomp(&y.alpha, &b_cat.whisker_l(pp, &on_two[&beta.name]))
                                        .clone();
                                    lhs == x.alpha
                                }
                                SliceKind::OpTrancheLax => {
                                    let lhs = b_cat
                                        .vcomp(&b_cat.whisker_r(&on_two[&beta.name], p), &x.alpha)
                                        .clone();
                                    lhs == y.alpha
                                }
                                SliceKind::OpTrancheColax => {
                                    let lhs = b_cat
                                        .vcomp(&y.alpha, &b_cat.whisker_r(&on_two[&beta.name], p))
                                        .clone();
                                    lhs == x.alpha
                                }
                            };
                            if !ok {
                                continue;
                            }
                            let nm = if colaxish {
                                two_name(&y.name, &x.name, &beta.name)
                            } else {
                                two_name(&x.name, &y.name, &beta.name)
                            };
                            arrows.push(crate::cat::Arrow {
                                name: nm.clone(),
                                src: x.name.clone(),
                                tgt: y.name.clone(),
                            });
                            twos.push((
                                nm.clone(),
                                x.name.clone(),
                                y.name.clone(),
                                beta.name.clone(),
                                s.clone(),
                            ));
                            if x.name == y.name && a_cat.hom(a, ap).is_identity(&beta.name) {
                                identity.insert(x.name.clone(), nm);
                            }
                        }
                    }
                }
                let mut comp = BTreeMap::new();
                for a2 in &arrows {
                    for a1 in &arrows {
                        if a1.tgt != a2.src {
                            continue;
                        }
                        let bc = a_cat
                            .hom(a, ap)
                            .comp(&two_beta(&a2.name), &two_beta(&a1.name))
                            .clone();
                        let nm = if colaxish {
                            two_name(&a2.tgt, &a1.src, &bc)
                        } else {
                            two_name(&a1.src, &a2.tgt, &bc)
                        };
                        comp.insert((a2.name.clone(), a1.name.clone()), nm);
                    }
                }
                let objs: Vec<Name> = local.iter().map(|c| c.name.clone()).collect();
                homs.insert(
                    (s.clone(), t.clone()),
                    FinCat::new_unchecked(objs, arrows, identity, comp),
                );
            }
        }

        // unit 1-cells
        let mut unit1 = BTreeMap::new();
        for (o, (a, p)) in &legs {
            let alpha = match kind {
                SliceKind::TrancheLax | SliceKind::TrancheColax => {
                    b_cat.whisker_l(p, &unit_cell[a])
                }
                SliceKind::OpTrancheLax | SliceKind::OpTrancheColax => {
                    b_cat.whisker_r(&unit_cell[a], p)
                }
            };
            unit1.insert(o.clone(), one_name(a_cat.unit1(a), &alpha, p));
        }

        // 1-cell composition
        let mut hcomp1 = BTreeMap::new();
        for c2 in &ones {
            for c1 in &ones {
                if c1.tgt != c2.src {
                    continue;
                }
                let (_, p_src) = &legs[&c1.src];
                let (_, p_final) = &legs[&c2.tgt];
                let gf = a_cat.hcomp1(&c2.f, &c1.f).clone();
                let key = (c2.f.clone(), c1.f.clone());
                let (delta, slot) = match kind {
                    SliceKind::TrancheLax => {
                        let s2 = b_cat.whisker_r(&c2.alpha, &on_one[&c1.f]);
                        let s3 = b_cat.whisker_l(p_final, &comp_cell[&key]);
                        (
                            b_cat
                                .vcomp(&s3, &b_cat.vcomp(&s2, &c1.alpha).clone())
                                .clone(),
                            p_final,
                        )
                    }
                    SliceKind::TrancheColax => {
                        let s1 = b_cat.whisker_l(p_final, &comp_cell[&key]);
                        let s2 = b_cat.whisker_r(&c2.alpha, &on_one[&c1.f]);
                        (
                            b_cat
                                .vcomp(&c1.alpha, &b_cat.vcomp(&s2, &s1).clone())
                                .clone(),
                            p_final,
                        )
                    }
                    SliceKind::OpTrancheLax => {
                        let s2 = b_cat.whisker_l(&on_one[&c2.f], &c1.alpha);
                        let s3 = b_cat.whisker_r(&comp_cell[&key], p_src);
                        (
                            b_cat
                                .vcomp(&s3, &b_cat.vcomp(&s2, &c2.alpha).clone())
                                .clone(),
                            p_src,
                        )
                    }
                    SliceKind::OpTrancheColax => {
                        let s1 = b_cat.whisker_r(&comp_cell[&key], p_src);
                        let s2 = b_cat.whisker_l(&on_one[&c2.f], &c1.alpha);
                        (
                            b_cat
                                .vcomp(&c2.alpha, &b_cat.vcomp(&s2, &s1).clone())
                                .clone(),
                            p_src,
                        )
                    }
                };
                hcomp1.insert(
                    (c2.name.clone(), c1.name.clone()),
                    one_name(&gf, &delta, slot),
                );
            }
        }

        // 2-cell horizontal composition
        let one_src: BTreeMap<Name, Name> =
            ones.iter().map(|c| (c.name.clone(), c.src.clone())).collect();
        let one_tgt: BTreeMap<Name, Name> =
            ones.iter().map(|c| (c.name.clone(), c.tgt.clone())).collect();
        for (n2, x2, y2, b2, s2) in &twos {
            for (n1, x1, y1, b1, _s1) in &twos {
                if one_tgt[x1] != *s2 {
                    continue;
                }
                let _ = s2;
                let ba = a_cat.hcomp2(b2, b1).clone();
                let sx = hcomp1[&(x2.clone(), x1.clone())].clone();
                let tx = hcomp1[&(y2.clone(), y1.clone())].clone();
                let nm = if colaxish {
                    two_name(&tx, &sx, &ba)
                } else {
                    two_name(&sx, &tx, &ba)
                };
                hcomp2.insert((n2.clone(), n1.clone()), nm);
            }
        }
        let _ = one_src;

        let twocat = TwoCat::new(objects, homs, unit1, hcomp1, hcomp2)?;
        let projection = StrictTwoFunctor::new(
            Arc::new(twocat.clone()),
            a_cat.clone(),
            legs.iter().map(|(o, (a, _))| (o.clone(), a.clone())).collect(),
            twocat
                .one_cells()
                .map(|(c, _)| (c.clone(), one_f(c)))
                .collect(),
            twocat
                .two_cells()
                .map(|(c, _)| (c.clone(), two_beta(c)))
                .collect(),
        )?;
        Ok((twocat, projection))
    }
}

/// Witness that `z` admits a final object: per object `a` the final 1-cell
/// `p_a` of `Hom(a,z)`, and per 1-cell `f : a -> z` the unique 2-cell
/// `phi_f : f => p_a`.
#[derive(Clone, Debug)]
pub struct FinalWitness {
    pub z: Name,
    pub p: BTreeMap<Name, Name>,
    pub phi: BTreeMap<Name, Name>,
}

/// First object (canonical id order) admitting a final object.
pub fn object_admitting_final(c: &TwoCat) -> Option<FinalWitness> {
    'cand: for z in c.objects() {
        let mut p = BTreeMap::new();
        let mut phi = BTreeMap::new();
        for a in c.objects() {
            let hom = c.hom(a, z);
            let Some((pa, tofinal)) = hom.final_object() else {
                continue 'cand;
            };
            p.insert(a.clone(), pa);
            for (f, ar) in tofinal {
                phi.insert(f, ar);
            }
        }
        return Some(FinalWitness {
            z: z.clone(),
            p,
            phi,
        });
    }
    None
}

pub fn object_admitting_initial(c: &TwoCat) -> Option<FinalWitness> {
    'cand: for z in c.objects() {
        let mut p = BTreeMap::new();
        let mut phi = BTreeMap::new();
        for a in c.objects() {
            let hom = c.hom(a, z);
            let Some((pa, frominit)) = hom.initial_object() else {
                continue 'cand;
            };
            p.insert(a.clone(), pa);
            for (f, ar) in frominit {
                phi.insert(f, ar);
            }
        }
        return Some(FinalWitness {
            z: z.clone(),
            p,
            phi,
        });
    }
    None
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Side {
    Left,
    Right,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Flavor {
    Lax,
    Colax,
}

/// Evaluates the defining slice condition objectwise; returns per-object
/// witnesses when the predicate holds.
pub fn preadjoint_witnesses(
    u: SliceFunctor<'_>,
    side: Side,
    flavor: Flavor,
) -> Result<Option<BTreeMap<Name, FinalWitness>>> {
    let cod: Arc<TwoCat> = match &u {
        SliceFunctor::Lax(l) => l.cod.clone(),
        SliceFunctor::Colax(c) => c.cod.clone(),
    };
    let mut out = BTreeMap::new();
    for b in cod.objects() {
        let w = match (side, flavor) {
            (Side::Left, Flavor::Colax) => {
                let s = slice_variant(reborrow(&u)?, b, SliceKind::TrancheColax)?;
                object_admitting_final(&s.twocat)
            }
            (Side::Left, Flavor::Lax) => {
                let s = slice_variant(reborrow(&u)?, b, SliceKind::TrancheLax)?;
                object_admitting_initial(&s.twocat)
            }
            (Side::Right, Flavor::Colax) => {
                let s = slice_variant(reborrow(&u)?, b, SliceKind::OpTrancheColax)?;
                object_admitting_final(&s.twocat.dual(DualKind::Op))
            }
            (Side::Right, Flavor::Lax) => {
                let s = slice_variant(reborrow(&u)?, b, SliceKind::OpTrancheLax)?;
                object_admitting_initial(&s.twocat.dual(DualKind::Op))
            }
        };
        match w {
            Some(w) => {
                out.insert(b.clone(), w);
            }
            None => return Ok(None),
        }
    }
    Ok(Some(out))
}

fn reborrow<'a>(u: &SliceFunctor<'a>) -> Result<SliceFunctor<'a>> {
    Ok(match u {
        SliceFunctor::Lax(l) => SliceFunctor::Lax(l),
        SliceFunctor::Colax(c) => SliceFunctor::Colax(c),
    })
}

pub fn is_preadjoint(u: SliceFunctor<'_>, side: Side, flavor: Flavor) -> Result<bool> {
    Ok(preadjoint_witnesses(u, side, flavor)?.is_some())
}

/// The fiber of a strict 2-functor over `b`: cells mapped to `b`, `1_b`,
/// `1_{1_b}`, with names kept.
pub fn fiber(u: &StrictTwoFunctor, b: &Name) -> Result<Arc<TwoCat>> {
    if !u.cod.has_object(b) {
        return Err(Error::Unknown {
            kind: "object",
            name: b.to_string(),
        });
    }
    let unit = u.cod.unit1(b).clone();
    let unit2 = u.cod.unit2(b).clone();
    let objects: Vec<Name> = u
        .dom
        .objects()
        .iter()
        .filter(|a| u.on_obj[*a] == *b)
        .cloned()
        .collect();
    let mut homs = BTreeMap::new();
    for a in &objects {
        for ap in &objects {
            let big = u.dom.hom(a, ap);
            let ones: Vec<Name> = big
                .objects()
                .iter()
                .filter(|f| u.on_one[*f] == unit)
                .cloned()
                .collect();
            let arrows: Vec<crate::cat::Arrow> = big
                .arrows()
                .iter()
                .filter(|t| {
                    u.on_two[&t.name] == unit2
                        && ones.contains(&t.src)
                        && ones.contains(&t.tgt)
                })
                .cloned()
                .collect();
            let identity = ones
                .iter()
                .map(|f| (f.clone(), big.id(f).clone()))
                .collect();
            let mut comp = BTreeMap::new();
            for a2 in &arrows {
                for a1 in &arrows {
                    if a1.tgt == a2.src {
                        comp.insert(
                            (a2.name.clone(), a1.name.clone()),
                            big.comp(&a2.name, &a1.name).clone(),
                        );
                    }
                }
            }
            homs.insert(
                (a.clone(), ap.clone()),
                FinCat::new_unchecked(ones, arrows, identity, comp),
            );
        }
    }
    let unit1 = objects
        .iter()
        .map(|a| (a.clone(), u.dom.unit1(a).clone()))
        .collect();
    let mut hcomp1 = BTreeMap::new();
    let mut hcomp2 = BTreeMap::new();
    {
        let probe = TwoCat::new_unchecked(
            objects.clone(),
            homs.clone(),
            unit1,
            BTreeMap::new(),
            BTreeMap::new(),
        );
        for (g, (gb, _)) in probe.one_cells() {
            for (f, (_, fb)) in probe.one_cells() {
                if fb == gb {
                    hcomp1.insert((g.clone(), f.clone()), u.dom.hcomp1(g, f).clone());
                }
            }
        }
        for (t2, (m, _)) in probe.two_cells() {
            for (t1, (_, m1)) in probe.two_cells() {
                if m1 == m {
                    hcomp2.insert((t2.clone(), t1.clone()), u.dom.hcomp2(t2, t1).clone());
                }
            }
        }
        let unit1b = probe
            .objects()
            .iter()
            .map(|a| (a.clone(), u.dom.unit1(a).clone()))
            .collect();
        return Ok(Arc::new(TwoCat::new(
            objects, homs, unit1b, hcomp1, hcomp2,
        )?));
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PrefibrationKind {
    Pre,
    Preop,
    Preco,
    Precoop,
}

impl PrefibrationKind {
    pub fn parse(s: &str) -> Option<Self> {
        match s {
            "pre" => Some(Self::Pre),
            "preop" => Some(Self::Preop),
            "preco" => Some(Self::Preco),
            "precoop" => Some(Self::Precoop),
            _ => None,
        }
    }
}

/// The canonical strict functor from the fiber into the slice of the given
/// kind, `a |-> (a, 1_b)`.
pub fn j_canonical(u: &StrictTwoFunctor, b: &Name, kind: SliceKind) -> Result<StrictTwoFunctor> {
    let fib = fiber(u, b)?;
    let lax = u.as_lax();
    let colax = u.as_colax();
    let slice = match kind {
        SliceKind::TrancheLax => tranche_lax(&lax, b)?,
        _ => {
            let f = match kind {
                SliceKind::TrancheColax | SliceKind::OpTrancheColax => SliceFunctor::Colax(&colax),
                _ => SliceFunctor::Lax(&lax),
            };
            slice_variant(f, b, kind)?
        }
    };
    let unit = u.cod.unit1(b).clone();
    let idtwo = u.cod.unit2(b).clone();
    let on_obj: BTreeMap<Name, Name> = fib
        .objects()
        .iter()
        .map(|a| (a.clone(), ob_name(a, &unit)))
        .collect();
    let on_one: BTreeMap<Name, Name> = fib
        .one_cells()
        .map(|(f, _)| (f.clone(), one_name(f, &idtwo, &unit)))
        .collect();
    let on_two: BTreeMap<Name, Name> = fib
        .two_cells()
        .map(|(t, _)| {
            let src1 = one_name(fib.vsrc(t), &idtwo, &unit);
            let tgt1 = one_name(fib.vtgt(t), &idtwo, &unit);
            let colaxish = matches!(kind, SliceKind::TrancheColax | SliceKind::OpTrancheColax);
            let nm = if colaxish {
                two_name(&tgt1, &src1, t)
            } else {
                two_name(&src1, &tgt1, t)
            };
            (t.clone(), nm)
        })
        .collect();
    StrictTwoFunctor::new(fib, slice.twocat.clone(), on_obj, on_one, on_two)
}

/// The preadjoint condition on the canonical fiber inclusion, per kind.
pub fn is_prefibration(u: &StrictTwoFunctor, kind: PrefibrationKind) -> Result<bool> {
    for b in u.cod.objects() {
        let ok = match kind {
            PrefibrationKind::Pre => {
                let j = j_canonical(u, b, SliceKind::OpTrancheColax)?;
                let jl = j.as_lax();
                is_preadjoint(SliceFunctor::Lax(&jl), Side::Left, Flavor::Lax)?
            }
            PrefibrationKind::Preop => {
                let j = j_canonical(u, b, SliceKind::TrancheColax)?;
                let jl = j.as_lax();
                is_preadjoint(SliceFunctor::Lax(&jl), Side::Right, Flavor::Lax)?
            }
            PrefibrationKind::Preco => {
                let j = j_canonical(u, b, SliceKind::OpTrancheLax)?;
                let jc = j.as_colax();
                is_preadjoint(SliceFunctor::Colax(&jc), Side::Left, Flavor::Colax)?
            }
            PrefibrationKind::Precoop => {
                let j = j_canonical(u, b, SliceKind::TrancheLax)?;
                let jc = j.as_colax();
                is_preadjoint(SliceFunctor::Colax(&jc), Side::Right, Flavor::Colax)?
            }
        };
        if !ok {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Post-composition by `p : b -> b'` on the lax slice.
pub fn slice_transition(
    u: &LaxTwoFunctor,
    p: &Name,
) -> Result<StrictTwoFunctor> {
    let b_cat = &u.cod;
    if !b_cat.has_one(p) {
        return Err(Error::Unknown {
            kind: "1-cell",
            name: p.to_string(),
        });
    }
    let (b, bp) = b_cat.ends1(p).clone();
    let from = tranche_lax(u, &b)?;
    let to = tranche_lax(u, &bp)?;
    let on_obj: BTreeMap<Name, Name> = from
        .twocat
        .objects()
        .iter()
        .map(|o| {
            let (a, q) = ob_parts(o);
            (o.clone(), ob_name(&a, b_cat.hcomp1(p, &q)))
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = from
        .twocat
        .one_cells()
        .map(|(c, _)| {
            let (f, al, slot) = one_parts(c);
            (
                c.clone(),
                one_name(&f, &b_cat.whisker_l(p, &al), b_cat.hcomp1(p, &slot)),
            )
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = from
        .twocat
        .two_cells()
        .map(|(c, _)| {
            let (x, y) = two_ends(c);
            (
                c.clone(),
                two_name(&on_one[&x], &on_one[&y], &two_beta(c)),
            )
        })
        .collect();
    StrictTwoFunctor::new(from.twocat.clone(), to.twocat.clone(), on_obj, on_one, on_two)
}

pub fn ob_parts(n: &Name) -> (Name, Name) {
    match n {
        Name::Node("ob", parts) => (parts[0].clone(), parts[1].clone()),
        _ => panic!("not a slice object name: {n}"),
    }
}

/// (src 1-cell name, tgt 1-cell name, underlying 2-cell) of a slice 2-cell name.
pub fn two_cell_parts(n: &Name) -> (Name, Name, Name) {
    match n {
        Name::Node("two", parts) => (parts[0].clone(), parts[1].clone(), parts[2].clone()),
        _ => panic!("not a slice 2-cell name: {n}"),
    }
}

pub fn one_parts(n: &Name) -> (Name, Name, Name) {
    match n {
        Name::Node("one", parts) => (parts[0].clone(), parts[1].clone(), parts[2].clone()),
        _ => panic!("not a slice 1-cell name: {n}"),
    }
}

/// The slice comparison induced by a commutative triangle `v . u = w` over
/// `c`, for each of the four kinds.
pub fn induced_slice_functor(
    u: &StrictTwoFunctor,
    v: &StrictTwoFunctor,
    w: &StrictTwoFunctor,
    c: &Name,
    kind: SliceKind,
) -> Result<StrictTwoFunctor> {
    let vu = v.compose(u)?;
    if vu != *w {
        return Err(Error::Mismatch {
            what: "triangle",
            detail: "v . u differs from w".into(),
        });
    }
    let (wl, wc) = (w.as_lax(), w.as_colax());
    let (vl, vc) = (v.as_lax(), v.as_colax());
    let dom = match kind {
        SliceKind::TrancheLax => tranche_lax(&wl, c)?,
        SliceKind::TrancheColax | SliceKind::OpTrancheColax => {
            slice_variant(SliceFunctor::Colax(&wc), c, kind)?
        }
        SliceKind::OpTrancheLax => slice_variant(SliceFunctor::Lax(&wl), c, kind)?,
    };
    let cod = match kind {
        SliceKind::TrancheLax => tranche_lax(&vl, c)?,
        SliceKind::TrancheColax | SliceKind::OpTrancheColax => {
            slice_variant(SliceFunctor::Colax(&vc), c, kind)?
        }
        SliceKind::OpTrancheLax => slice_variant(SliceFunctor::Lax(&vl), c, kind)?,
    };
    let colaxish = matches!(kind, SliceKind::TrancheColax | SliceKind::OpTrancheColax);
    let on_obj: BTreeMap<Name, Name> = dom
        .twocat
        .objects()
        .iter()
        .map(|o| {
            let (a, p) = ob_parts(o);
            (o.clone(), ob_name(&u.on_obj[&a], &p))
        })
        .collect();
    let on_one: BTreeMap<Name, Name> = dom
        .twocat
        .one_cells()
        .map(|(cell, _)| {
            let (f, al, slot) = one_parts(cell);
            (cell.clone(), one_name(&u.on_one[&f], &al, &slot))
        })
        .collect();
    let on_two: BTreeMap<Name, Name> = dom
        .twocat
        .two_cells()
        .map(|(cell, _)| {
            let (x, y) = two_ends(cell);
            let nm = if colaxish {
                // name slots are (tgt, src) for the colax kinds
                two_name(&on_one[&x], &on_one[&y], &u.on_two[&two_beta(cell)])
            } else {
                two_name(&on_one[&x], &on_one[&y], &u.on_two[&two_beta(cell)])
            };
            (cell.clone(), nm)
        })
        .collect();
    StrictTwoFunctor::new(
        dom.twocat.clone(),
        cod.twocat.clone(),
        on_obj,
        on_one,
        on_two,
    )
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;
    use crate::functor::{enumerate_strict, iso_check};
    use crate::twocat::{from_cat, terminal};

    fn arrow_cat() -> Arc<TwoCat> {
        Arc::new(from_cat(&ordinal(1)))
    }

    #[test]
    fn tranche_lax_of_point_is_point() {
        let e = Arc::new(terminal());
        let id = StrictTwoFunctor::identity(e.clone()).as_lax();
        let s = tranche_lax(&id, &e.objects()[0]).unwrap();
        assert_eq!(s.twocat.objects().len(), 1);
        assert_eq!(s.twocat.one_count(), 1);
        assert_eq!(s.twocat.two_count(), 1);
    }

    #[test]
    fn comma_over_one_matches_enumeration() {
        // A = [1] as 2-category, u = id, b = 1: objects (0, 0->1), (1, id_1)
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone()).as_lax();
        let s = tranche_lax(&id, &Name::num(1)).unwrap();
        assert_eq!(s.twocat.objects().len(), 2);
        // it is the comma category [1]/1: one non-identity 1-cell
        assert_eq!(s.twocat.one_count(), 3);
    }

    #[test]
    fn object_count_is_sum_of_hom_sizes() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone()).as_lax();
        for b in a.objects() {
            let s = tranche_lax(&id, b).unwrap();
            let expect: usize = a
                .objects()
                .iter()
                .map(|x| a.hom(x, b).objects().len())
                .sum();
            assert_eq!(s.twocat.objects().len(), expect);
        }
    }

    #[test]
    fn all_variants_agree_with_direct_construction() {
        let a = arrow_cat();
        let lax = StrictTwoFunctor::identity(a.clone()).as_lax();
        let colax = StrictTwoFunctor::identity(a.clone()).as_colax();
        for b in a.objects() {
            slice_variant(SliceFunctor::Lax(&lax), b, SliceKind::OpTrancheLax).unwrap();
            slice_variant(SliceFunctor::Colax(&colax), b, SliceKind::TrancheColax).unwrap();
            slice_variant(SliceFunctor::Colax(&colax), b, SliceKind::OpTrancheColax).unwrap();
        }
    }

    #[test]
    fn exemples_of_quadruple_on_arrow() {
        let a = arrow_cat();
        let lax = StrictTwoFunctor::identity(a.clone()).as_lax();
        let colax = StrictTwoFunctor::identity(a.clone()).as_colax();
        for b in a.objects() {
            let tc = slice_variant(SliceFunctor::Colax(&colax), b, SliceKind::TrancheColax)
                .unwrap();
            let w = object_admitting_final(&tc.twocat).expect("colax slice admits final");
            assert_eq!(w.z, ob_name(b, a.unit1(b)));
            let tl = tranche_lax(&lax, b).unwrap();
            assert!(object_admitting_initial(&tl.twocat).is_some());
            let oc = slice_variant(SliceFunctor::Colax(&colax), b, SliceKind::OpTrancheColax)
                .unwrap();
            assert!(object_admitting_final(&oc.twocat.dual(DualKind::Op)).is_some());
            let ol = slice_variant(SliceFunctor::Lax(&lax), b, SliceKind::OpTrancheLax).unwrap();
            assert!(object_admitting_initial(&ol.twocat.dual(DualKind::Op)).is_some());
        }
    }

    #[test]
    fn georges_point_slice_is_op_hom() {
        // q : e -> A picking z = 0 in [1]; tranche_colax(q, x) is Hom(z,x)^op as a 2-category
        let e = Arc::new(terminal());
        let a = arrow_cat();
        let (fs, _) = enumerate_strict(&e, &a, 16);
        let q = fs
            .iter()
            .find(|f| f.on_obj.values().next() == Some(&Name::num(0)))
            .unwrap();
        let qc = q.as_colax();
        for x in a.objects() {
            let s = slice_variant(SliceFunctor::Colax(&qc), x, SliceKind::TrancheColax).unwrap();
            let hom_zx = a.hom(&Name::num(0), x);
            assert_eq!(s.twocat.objects().len(), hom_zx.objects().len());
            // homs of the point slice are the (op) hom-sets of A: discrete here
            assert_eq!(s.twocat.two_count(), s.twocat.one_count());
        }
    }

    #[test]
    fn fiber_of_identity_is_point() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone());
        for b in a.objects() {
            let f = fiber(&id, b).unwrap();
            assert_eq!(f.objects().len(), 1);
            assert_eq!(f.one_count(), 1);
            assert_eq!(f.two_count(), 1);
        }
    }

    #[test]
    fn fiber_duality_identities() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone());
        for b in a.objects() {
            let f = fiber(&id, b).unwrap();
            for k in [DualKind::Op, DualKind::Co, DualKind::Coop] {
                let lhs = fiber(&id.dual(k), b).unwrap();
                assert_eq!(*lhs, f.dual(k));
            }
        }
    }

    #[test]
    fn j_projection_is_fiber_inclusion() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone());
        for b in a.objects() {
            for kind in [
                SliceKind::TrancheLax,
                SliceKind::TrancheColax,
                SliceKind::OpTrancheLax,
                SliceKind::OpTrancheColax,
            ] {
                let j = j_canonical(&id, b, kind).unwrap();
                assert!(j.validate().is_empty());
            }
        }
    }

    #[test]
    fn identity_is_preadjoint_all_variants() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone());
        let lax = id.as_lax();
        let colax = id.as_colax();
        assert!(is_preadjoint(SliceFunctor::Lax(&lax), Side::Left, Flavor::Lax).unwrap());
        assert!(is_preadjoint(SliceFunctor::Lax(&lax), Side::Right, Flavor::Lax).unwrap());
        assert!(is_preadjoint(SliceFunctor::Colax(&colax), Side::Left, Flavor::Colax).unwrap());
        assert!(is_preadjoint(SliceFunctor::Colax(&colax), Side::Right, Flavor::Colax).unwrap());
    }

    #[test]
    fn product_projection_is_precoopfibration() {
        // [1] x A -> A with A = [1]
        let a = arrow_cat();
        let prod = Arc::new(a.product(&a));
        let on_obj: BTreeMap<Name, Name> = prod
            .objects()
            .iter()
            .map(|o| match o {
                Name::Node("pr", parts) => (o.clone(), parts[1].clone()),
                _ => unreachable!(),
            })
            .collect();
        let on_one: BTreeMap<Name, Name> = prod
            .one_cells()
            .map(|(c, _)| match c {
                Name::Node("pr", parts) => (c.clone(), parts[1].clone()),
                _ => unreachable!(),
            })
            .collect();
        let on_two: BTreeMap<Name, Name> = prod
            .two_cells()
            .map(|(c, _)| match c {
                Name::Node("pr", parts) => (c.clone(), parts[1].clone()),
                _ => unreachable!(),
            })
            .collect();
        let proj = StrictTwoFunctor::new(prod.clone(), a.clone(), on_obj, on_one, on_two).unwrap();
        assert!(is_prefibration(&proj, PrefibrationKind::Precoop).unwrap());
    }

    #[test]
    fn constant_functor_not_precoopfibration() {
        // constant A -> [1] at 0, A = e: fiber over 1 empty but slice nonempty
        let e = Arc::new(terminal());
        let a = arrow_cat();
        let (fs, _) = enumerate_strict(&e, &a, 16);
        let q = fs
            .iter()
            .find(|f| f.on_obj.values().next() == Some(&Name::num(0)))
            .unwrap();
        assert!(!is_prefibration(q, PrefibrationKind::Precoop).unwrap());
    }

    #[test]
    fn transition_along_identity_is_identity() {
        let a = arrow_cat();
        let lax = StrictTwoFunctor::identity(a.clone()).as_lax();
        for b in a.objects() {
            let t = slice_transition(&lax, a.unit1(b)).unwrap();
            let idf = StrictTwoFunctor::identity(t.dom.clone());
            assert_eq!(t.on_obj, idf.on_obj);
            assert_eq!(t.on_one, idf.on_one);
            assert_eq!(t.on_two, idf.on_two);
        }
    }

    #[test]
    fn transition_is_functorial_in_p() {
        let a = arrow_cat();
        let lax = StrictTwoFunctor::identity(a.clone()).as_lax();
        let p = Name::node("le", vec![Name::num(0), Name::num(1)]);
        let t = slice_transition(&lax, &p).unwrap();
        assert!(t.validate().is_empty());
        // composite with identity transition
        let t2 = slice_transition(&lax, a.unit1(&Name::num(1))).unwrap();
        let c = t2.compose(&t).unwrap();
        assert_eq!(c.on_obj, t.on_obj);
    }

    #[test]
    fn induced_functor_of_iso_is_iso() {
        let a = arrow_cat();
        let id = StrictTwoFunctor::identity(a.clone());
        for c in a.objects() {
            let f = induced_slice_functor(&id, &id, &id, c, SliceKind::TrancheColax).unwrap();
            assert!(iso_check(&f).unwrap());
        }
    }
}
