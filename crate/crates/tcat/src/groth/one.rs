//! 1-categorical integration and categories of elements.

use std::collections::BTreeMap;
use std::sync::Arc;

use crate::cat::{cat_iso_check, Arrow, CatFunctor, FinCat, Presheaf};
use crate::error::{Error, Result};
use crate::name::Name;
use crate::validate::ValidationReport;

/// A Cat-valued functor on a finite base, by explicit tables.
#[derive(Clone, Debug)]
pub struct CatDiagram {
    pub base: Arc<FinCat>,
    pub at: BTreeMap<Name, FinCat>,
    pub act: BTreeMap<Name, CatFunctor>,
}

impl CatDiagram {
    pub fn new(
        base: Arc<FinCat>,
        at: BTreeMap<Name, FinCat>,
        act: BTreeMap<Name, CatFunctor>,
    ) -> Result<CatDiagram> {
        let d = CatDiagram { base, at, act };
        let r = d.validate();
        if r.is_empty() {
            Ok(d)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for a in self.base.objects() {
            match self.at.get(a) {
                None => r.push("diagram-total", vec![a.clone()], "no category at object"),
                Some(c) => r.merge(c.validate()),
            }
        }
        for f in self.base.arrows() {
            let Some(ff) = self.act.get(&f.name) else {
                r.push("diagram-total", vec![f.name.clone()], "no functor at arrow");
                continue;
            };
            if self.at.get(&f.src).map(|c| c != &*ff.dom).unwrap_or(true)
                || self.at.get(&f.tgt).map(|c| c != &*ff.cod).unwrap_or(true)
            {
                r.push("diagram", vec![f.name.clone()], "functor endpoints wrong");
            }
            r.merge(ff.validate());
        }
        if !r.is_empty() {
            return r;
        }
        for o in self.base.objects() {
            let idf = &self.act[self.base.id(o)];
            let ident = CatFunctor::identity(Arc::new(self.at[o].clone()));
            if idf.on_obj != ident.on_obj || idf.on_arr != ident.on_arr {
                r.push("diagram", vec![o.clone()], "identity arrow not sent to identity");
            }
        }
        for ((g, f), h) in self.base.comp_table() {
            let gf = self.act[g].compose(&self.act[f]);
            match gf {
                Err(_) => r.push("diagram", vec![g.clone(), f.clone()], "not composable"),
                Ok(gf) => {
                    let want = &self.act[h];
                    if gf.on_obj != want.on_obj || gf.on_arr != want.on_arr {
                        r.push(
                            "diagram",
                            vec![g.clone(), f.clone()],
                            "functoriality fails on composite",
                        );
                    }
                }
            }
        }
        r
    }

    /// The constant diagram at the terminal category.
    pub fn constant_terminal(base: Arc<FinCat>) -> CatDiagram {
        let pt = crate::cat::terminal_cat();
        let at: BTreeMap<Name, FinCat> = base
            .objects()
            .iter()
            .map(|o| (o.clone(), pt.clone()))
            .collect();
        let idpt = CatFunctor::identity(Arc::new(pt));
        let act = base
            .arrows()
            .iter()
            .map(|f| (f.name.clone(), idpt.clone()))
            .collect();
        CatDiagram { base, at, act }
    }
}

pub fn iob(a: &Name, x: &Name) -> Name {
    Name::pair("iob", a.clone(), x.clone())
}

pub fn iarr(f: &Name, r: &Name, slot: &Name) -> Name {
    Name::node("iarr", vec![f.clone(), r.clone(), slot.clone()])
}

/// The category of a covariant Cat-valued diagram: objects `(a, x)`, arrows
/// `(f, r : F(f)(x) -> x')`.
pub fn int_cat(diag: &CatDiagram) -> Result<FinCat> {
    let r = diag.validate();
    if !r.is_empty() {
        return Err(Error::Invalid(r));
    }
    let base = &diag.base;
    let mut objects = Vec::new();
    for a in base.objects() {
        for x in diag.at[a].objects() {
            objects.push(iob(a, x));
        }
    }
    let mut arrows = Vec::new();
    let mut identity = BTreeMap::new();
    for f in base.arrows() {
        let ff = &diag.act[&f.name];
        let fib_tgt = &diag.at[&f.tgt];
        for x in diag.at[&f.src].objects() {
            let fx = &ff.on_obj[x];
            for r in fib_tgt.arrows() {
                if r.src == *fx {
                    arrows.push(Arrow {
                        name: iarr(&f.name, &r.name, x),
                        src: iob(&f.src, x),
                        tgt: iob(&f.tgt, &r.tgt),
                    });
                }
            }
        }
    }
    for a in base.objects() {
        for x in diag.at[a].objects() {
            identity.insert(
                iob(a, x),
                iarr(base.id(a), diag.at[a].id(x), x),
            );
        }
    }
    // composition: (g, s) . (f, r) = (g f, s . F(g)(r))
    let mut comp = BTreeMap::new();
    let arrs = arrows.clone();
    for a2 in &arrs {
        let (g, s, _x1) = iarr_parts(&a2.name);
        for a1 in &arrs {
            if a1.tgt != a2.src {
                continue;
            }
            let (f, r, x) = iarr_parts(&a1.name);
            let gf = base.comp(&g, &f).clone();
            let gobj = &base.arrow(&g).unwrap().tgt;
            let gr = diag.act[&g].on_arr[&r].clone();
            let sr = diag.at[gobj].comp(&s, &gr).clone();
            comp.insert(
                (a2.name.clone(), a1.name.clone()),
                iarr(&gf, &sr, &x),
            );
        }
    }
    FinCat::new(objects, arrows, identity, comp)
}

pub(crate) fn iarr_parts(n: &Name) -> (Name, Name, Name) {
    match n {
        Name::Node("iarr", p) => (p[0].clone(), p[1].clone(), p[2].clone()),
        _ => panic!("not an integration arrow: {n}"),
    }
}

pub(crate) fn iob_parts(n: &Name) -> (Name, Name) {
    match n {
        Name::Node("iob", p) => (p[0].clone(), p[1].clone()),
        _ => panic!("not an integration object: {n}"),
    }
}

/// A natural transformation between Cat-valued diagrams on the same base.
#[derive(Clone, Debug)]
pub struct CatNat {
    pub from: CatDiagram,
    pub to: CatDiagram,
    pub at: BTreeMap<Name, CatFunctor>,
}

impl CatNat {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        if *self.from.base != *self.to.base {
            r.push("nat", vec![], "bases differ");
            return r;
        }
        for a in self.from.base.objects() {
            match self.at.get(a) {
                None => r.push("nat-total", vec![a.clone()], "missing component"),
                Some(c) => {
                    if *c.dom != self.from.at[a] || *c.cod != self.to.at[a] {
                        r.push("nat", vec![a.clone()], "component endpoints wrong");
                    }
                    r.merge(c.validate());
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        for f in self.from.base.arrows() {
            let lhs = self.at[&f.tgt].compose(&self.from.act[&f.name]).unwrap();
            let rhs = self.to.act[&f.name].compose(&self.at[&f.src]).unwrap();
            if lhs.on_obj != rhs.on_obj || lhs.on_arr != rhs.on_arr {
                r.push("nat", vec![f.name.clone()], "naturality square fails");
            }
        }
        r
    }
}

/// The induced functor between the integrations.
pub fn int_nat(nat: &CatNat) -> Result<CatFunctor> {
    let r = nat.validate();
    if !r.is_empty() {
        return Err(Error::Invalid(r));
    }
    let dom = Arc::new(int_cat(&nat.from)?);
    let cod = Arc::new(int_cat(&nat.to)?);
    let on_obj = dom
        .objects()
        .iter()
        .map(|o| {
            let (a, x) = iob_parts(o);
            (o.clone(), iob(&a, &nat.at[&a].on_obj[&x]))
        })
        .collect();
    let on_arr = dom
        .arrows()
        .iter()
        .map(|ar| {
            let (f, r, x) = iarr_parts(&ar.name);
            let tgt_obj = &nat.from.base.arrow(&f).unwrap().tgt;
            let src_obj = &nat.from.base.arrow(&f).unwrap().src;
            (
                ar.name.clone(),
                iarr(&f, &nat.at[tgt_obj].on_arr[&r], &nat.at[src_obj].on_obj[&x]),
            )
        })
        .collect();
    CatFunctor::new(dom, cod, on_obj, on_arr)
}

/// The comma category `A/X` of a presheaf: objects `(a, x)`, arrows the `f`
/// with `x' f = x`.
pub fn cat_of_elements(x: &Presheaf) -> FinCat {
    let base = &x.base;
    let mut objects = Vec::new();
    for a in base.objects() {
        for e in &x.at[a] {
            objects.push(iob(a, e));
        }
    }
    let mut arrows = Vec::new();
    for f in base.arrows() {
        for e_tgt in &x.at[&f.tgt] {
            let e_src = &x.act[&f.name][e_tgt];
            arrows.push(Arrow {
                name: Name::pair("el", f.name.clone(), e_tgt.clone()),
                src: iob(&f.src, e_src),
                tgt: iob(&f.tgt, e_tgt),
            });
        }
    }
    let identity = objects
        .iter()
        .map(|o| {
            let (a, e) = iob_parts(o);
            (o.clone(), Name::pair("el", base.id(&a).clone(), e))
        })
        .collect();
    let mut comp = BTreeMap::new();
    for f2 in base.arrows() {
        for f1 in base.arrows() {
            if f1.tgt != f2.src {
                continue;
            }
            let gf = base.comp(&f2.name, &f1.name);
            for e in &x.at[&f2.tgt] {
                let e_mid = &x.act[&f2.name][e];
                comp.insert(
                    (
                        Name::pair("el", f2.name.clone(), e.clone()),
                        Name::pair("el", f1.name.clone(), e_mid.clone()),
                    ),
                    Name::pair("el", gf.clone(), e.clone()),
                );
            }
        }
    }
    FinCat::new_unchecked(objects, arrows, identity, comp)
}

#[derive(Debug)]
pub struct FubiniWitness {
    pub total: FinCat,
    pub over_first: FinCat,
    pub over_second: FinCat,
    pub to_first: CatFunctor,
    pub to_second: CatFunctor,
    pub first_is_iso: bool,
    pub second_is_iso: bool,
}

/// Builds the double integration and both iterated integrations of a diagram
/// over a product base, and certifies the canonical comparison functors.
pub fn fubini_check(
    i_cat: &Arc<FinCat>,
    j_cat: &Arc<FinCat>,
    diag: &CatDiagram,
) -> Result<FubiniWitness> {
    let prod = i_cat.product(j_cat);
    if *diag.base != prod {
        return Err(Error::Mismatch {
            what: "fubini",
            detail: "diagram base is not the product".into(),
        });
    }
    let total = int_cat(diag)?;
    let pr = |x: &Name, y: &Name| Name::pair("pr", x.clone(), y.clone());

    // G(i) = int_J F(i, -)
    let inner_over = |outer_is_first: bool| -> Result<CatDiagram> {
        let (outer, inner) = if outer_is_first {
            (i_cat, j_cat)
        } else {
            (j_cat, i_cat)
        };
        let mut at = BTreeMap::new();
        let mut slice_diag = BTreeMap::new();
        for o in outer.objects() {
            let fiber = CatDiagram {
                base: inner.clone(),
                at: inner
                    .objects()
                    .iter()
                    .map(|n| {
                        let key = if outer_is_first { pr(o, n) } else { pr(n, o) };
                        (n.clone(), diag.at[&key].clone())
                    })
                    .collect(),
                act: inner
                    .arrows()
                    .iter()
                    .map(|g| {
                        let key = if outer_is_first {
                            pr(outer.id(o), &g.name)
                        } else {
                            pr(&g.name, outer.id(o))
                        };
                        (g.name.clone(), diag.act[&key].clone())
                    })
                    .collect(),
            };
            at.insert(o.clone(), int_cat(&fiber)?);
            slice_diag.insert(o.clone(), fiber);
        }
        let mut act = BTreeMap::new();
        for f in outer.arrows() {
            let dom = Arc::new(at[&f.src].clone());
            let cod = Arc::new(at[&f.tgt].clone());
            let on_obj: BTreeMap<Name, Name> = dom
                .objects()
                .iter()
                .map(|ob| {
                    let (n, x) = iob_parts(ob);
                    let key = if outer_is_first {
                        pr(&f.name, inner.id(&n))
                    } else {
                        pr(inner.id(&n), &f.name)
                    };
                    (ob.clone(), iob(&n, &diag.act[&key].on_obj[&x]))
                })
                .collect();
            let on_arr: BTreeMap<Name, Name> = dom
                .arrows()
                .iter()
                .map(|ar| {
                    let (g, r, x) = iarr_parts(&ar.name);
                    let n_src = inner.arrow(&g).unwrap().src.clone();
                    let n_tgt = inner.arrow(&g).unwrap().tgt.clone();
                    let key_t = if outer_is_first {
                        pr(&f.name, inner.id(&n_tgt))
                    } else {
                        pr(inner.id(&n_tgt), &f.name)
                    };
                    let key_s = if outer_is_first {
                        pr(&f.name, inner.id(&n_src))
                    } else {
                        pr(inner.id(&n_src), &f.name)
                    };
                    (
                        ar.name.clone(),
                        iarr(
                            &g,
                            &diag.act[&key_t].on_arr[&r],
                            &diag.act[&key_s].on_obj[&x],
                        ),
                    )
                })
                .collect();
            act.insert(
                f.name.clone(),
                CatFunctor {
                    dom,
                    cod,
                    on_obj,
                    on_arr,
                },
            );
        }
        CatDiagram::new(outer.clone(), at, act)
    };

    let outer1 = inner_over(true)?;
    let outer2 = inner_over(false)?;
    let it1 = int_cat(&outer1)?;
    let it2 = int_cat(&outer2)?;

    // canonical maps, written from the identification (never searched)
    let mk_map = |target: &FinCat, first: bool| -> Result<CatFunctor> {
        let on_obj: BTreeMap<Name, Name> = total
            .objects()
            .iter()
            .map(|o| {
                let (ij, x) = iob_parts(o);
                let (i, j) = match &ij {
                    Name::Node("pr", p) => (p[0].clone(), p[1].clone()),
                    _ => unreachable!(),
                };
                let img = if first {
                    iob(&i, &iob(&j, &x))
                } else {
                    iob(&j, &iob(&i, &x))
                };
                (o.clone(), img)
            })
            .collect();
        let on_arr: BTreeMap<Name, Name> = total
            .arrows()
            .iter()
            .map(|ar| {
                let (fg, r, x) = iarr_parts(&ar.name);
                let (f, g) = match &fg {
                    Name::Node("pr", p) => (p[0].clone(), p[1].clone()),
                    _ => unreachable!(),
                };
                let src = total.arrow(&ar.name).unwrap().src.clone();
                let (ij, _) = iob_parts(&src);
                let (i, j) = match &ij {
                    Name::Node("pr", p) => (p[0].clone(), p[1].clone()),
                    _ => unreachable!(),
                };
                let img = if first {
                    // (f,(g, r)) at inner slot F(f,1_j)(x)
                    let mid = diag.act[&pr(&f, j_cat.id(&j))].on_obj[&x].clone();
                    iarr(&f, &iarr(&g, &r, &mid), &iob(&j, &x))
                } else {
                    let mid = diag.act[&pr(i_cat.id(&i), &g)].on_obj[&x].clone();
                    iarr(&g, &iarr(&f, &r, &mid), &iob(&i, &x))
                };
                (ar.name.clone(), img)
            })
            .collect();
        CatFunctor::new(
            Arc::new(total.clone()),
            Arc::new(target.clone()),
            on_obj,
            on_arr,
        )
    };
    let to_first = mk_map(&it1, true)?;
    let to_second = mk_map(&it2, false)?;
    let first_is_iso = cat_iso_check(&to_first);
    let second_is_iso = cat_iso_check(&to_second);
    Ok(FubiniWitness {
        total,
        over_first: it1,
        over_second: it2,
        to_first,
        to_second,
        first_is_iso,
        second_is_iso,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::{ordinal, terminal_cat};

    fn const_diag(base: Arc<FinCat>, fib: FinCat) -> CatDiagram {
        let idf = CatFunctor::identity(Arc::new(fib.clone()));
        CatDiagram {
            base: base.clone(),
            at: base.objects().iter().map(|o| (o.clone(), fib.clone())).collect(),
            act: base
                .arrows()
                .iter()
                .map(|f| (f.name.clone(), idf.clone()))
                .collect(),
        }
    }

    #[test]
    fn constant_point_integrates_to_base() {
        let base = Arc::new(ordinal(2));
        let d = CatDiagram::constant_terminal(base.clone());
        let c = int_cat(&d).unwrap();
        assert_eq!(c.objects().len(), base.objects().len());
        assert_eq!(c.arrows().len(), base.arrows().len());
    }

    #[test]
    fn point_base_integrates_to_fiber() {
        let base = Arc::new(terminal_cat());
        let d = const_diag(base, ordinal(2));
        let c = int_cat(&d).unwrap();
        assert_eq!(c.objects().len(), 3);
        assert_eq!(c.arrows().len(), 6);
    }

    #[test]
    fn interval_of_intervals_is_square() {
        // a = [1], F constant at [1]: int is [1] x [1]
        let base = Arc::new(ordinal(1));
        let d = const_diag(base.clone(), ordinal(1));
        let c = int_cat(&d).unwrap();
        let square = ordinal(1).product(&ordinal(1));
        assert_eq!(c.objects().len(), square.objects().len());
        assert_eq!(c.arrows().len(), square.arrows().len());
    }

    #[test]
    fn elements_of_representable_has_final() {
        let base = Arc::new(ordinal(2));
        let x = Presheaf::representable(base.clone(), &Name::num(1));
        let c = cat_of_elements(&x);
        assert!(c.validate().is_empty());
        let (z, _) = c.final_object().unwrap();
        assert_eq!(z, iob(&Name::num(1), base.id(&Name::num(1))));
    }

    #[test]
    fn elements_of_terminal_is_base() {
        let base = Arc::new(ordinal(2));
        let x = Presheaf::terminal(base.clone());
        let c = cat_of_elements(&x);
        assert_eq!(c.objects().len(), base.objects().len());
        assert_eq!(c.arrows().len(), base.arrows().len());
    }

    #[test]
    fn fubini_point_bases() {
        let i = Arc::new(terminal_cat());
        let j = Arc::new(terminal_cat());
        let prod = Arc::new(i.product(&j));
        let d = const_diag(prod, ordinal(1));
        let w = fubini_check(&i, &j, &d).unwrap();
        assert!(w.first_is_iso && w.second_is_iso);
        assert_eq!(w.total.objects().len(), 2);
    }

    #[test]
    fn fubini_constant_point_over_product() {
        let i = Arc::new(ordinal(1));
        let j = Arc::new(ordinal(1));
        let prod = Arc::new(i.product(&j));
        let d = CatDiagram::constant_terminal(prod);
        let w = fubini_check(&i, &j, &d).unwrap();
        assert!(w.first_is_iso && w.second_is_iso);
        assert_eq!(w.total.objects().len(), 4);
    }

    #[test]
    fn int_nat_of_identity() {
        let base = Arc::new(ordinal(1));
        let d = const_diag(base.clone(), ordinal(1));
        let nat = CatNat {
            from: d.clone(),
            to: d.clone(),
            at: base
                .objects()
                .iter()
                .map(|o| (o.clone(), CatFunctor::identity(Arc::new(ordinal(1)))))
                .collect(),
        };
        let f = int_nat(&nat).unwrap();
        assert!(cat_iso_check(&f));
    }
}
