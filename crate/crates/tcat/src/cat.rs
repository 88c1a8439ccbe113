//! Finite categories with explicit composition tables.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::name::Name;
use crate::validate::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Arrow {
    pub name: Name,
    pub src: Name,
    pub tgt: Name,
}

/// A finite category: object set, arrow set, identities, and a composition
/// table total exactly on composable pairs. Immutable once built; every
/// constructor validates.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FinCat {
    objects: Vec<Name>,
    arrows: Vec<Arrow>,
    identity: BTreeMap<Name, Name>,
    comp: BTreeMap<(Name, Name), Name>,
    by_name: BTreeMap<Name, usize>,
}

impl FinCat {
    pub fn new(
        objects: Vec<Name>,
        arrows: Vec<Arrow>,
        identity: BTreeMap<Name, Name>,
        comp: BTreeMap<(Name, Name), Name>,
    ) -> Result<FinCat> {
        let c = Self::new_unchecked(objects, arrows, identity, comp);
        let report = c.validate();
        if report.is_empty() {
            Ok(c)
        } else {
            Err(Error::Invalid(report))
        }
    }

    pub(crate) fn new_unchecked(
        mut objects: Vec<Name>,
        mut arrows: Vec<Arrow>,
        identity: BTreeMap<Name, Name>,
        comp: BTreeMap<(Name, Name), Name>,
    ) -> FinCat {
        objects.sort();
        objects.dedup();
        arrows.sort_by(|x, y| x.name.cmp(&y.name));
        let by_name = arrows
            .iter()
            .enumerate()
            .map(|(i, a)| (a.name.clone(), i))
            .collect();
        FinCat {
            objects,
            arrows,
            identity,
            comp,
            by_name,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let objset: BTreeSet<&Name> = self.objects.iter().collect();
        let mut seen = BTreeSet::new();
        for a in &self.arrows {
            if !seen.insert(&a.name) {
                r.push("unique-id", vec![a.name.clone()], "duplicate arrow id");
            }
            if !objset.contains(&a.src) || !objset.contains(&a.tgt) {
                r.push(
                    "src/tgt",
                    vec![a.name.clone()],
                    "arrow endpoint is not a declared object",
                );
            }
        }
        for o in &self.objects {
            match self.identity.get(o) {
                None => r.push("unit", vec![o.clone()], "object has no identity arrow"),
                Some(i) => match self.arrow(i) {
                    None => r.push("unit", vec![o.clone(), i.clone()], "identity not an arrow"),
                    Some(a) => {
                        if a.src != *o || a.tgt != *o {
                            r.push(
                                "unit",
                                vec![o.clone(), i.clone()],
                                "identity arrow is not an endomorphism of its object",
                            );
                        }
                    }
                },
            }
        }
        // comp total exactly on composable pairs, endpoints respected
        for g in &self.arrows {
            for f in &self.arrows {
                let key = (g.name.clone(), f.name.clone());
                let composable = f.tgt == g.src;
                match (composable, self.comp.get(&key)) {
                    (true, None) => r.push(
                        "comp-total",
                        vec![g.name.clone(), f.name.clone()],
                        "missing composite of composable pair",
                    ),
                    (false, Some(_)) => r.push(
                        "comp-total",
                        vec![g.name.clone(), f.name.clone()],
                        "composite declared for non-composable pair",
                    ),
                    (true, Some(h)) => match self.arrow(h) {
                        None => r.push(
                            "src/tgt",
                            vec![g.name.clone(), f.name.clone(), h.clone()],
                            "composite is not an arrow",
                        ),
                        Some(ha) => {
                            if ha.src != f.src || ha.tgt != g.tgt {
                                r.push(
                                    "src/tgt",
                                    vec![g.name.clone(), f.name.clone(), h.clone()],
                                    "composite has wrong endpoints",
                                );
                            }
                        }
                    },
                    (false, None) => {}
                }
            }
        }
        if !r.is_empty() {
            return r; // endpoint errors make the law checks noisy
        }
        // unit laws
        for f in &self.arrows {
            let it = &self.identity[&f.tgt];
            let is = &self.identity[&f.src];
            if self.comp[&(it.clone(), f.name.clone())] != f.name {
                r.push(
                    "unit-law",
                    vec![f.name.clone()],
                    "id(tgt f) . f differs from f",
                );
            }
            if self.comp[&(f.name.clone(), is.clone())] != f.name {
                r.push(
                    "unit-law",
                    vec![f.name.clone()],
                    "f . id(src f) differs from f",
                );
            }
        }
        // associativity on all composable triples
        for h in &self.arrows {
            for g in &self.arrows {
                if g.tgt != h.src {
                    continue;
                }
                for f in &self.arrows {
                    if f.tgt != g.src {
                        continue;
                    }
                    let gf = &self.comp[&(g.name.clone(), f.name.clone())];
                    let hg = &self.comp[&(h.name.clone(), g.name.clone())];
                    let l = &self.comp[&(h.name.clone(), gf.clone())];
                    let rr = &self.comp[&(hg.clone(), f.name.clone())];
                    if l != rr {
                        r.push(
                            "assoc",
                            vec![h.name.clone(), g.name.clone(), f.name.clone()],
                            format!("h(gf) = {l} but (hg)f = {rr}"),
                        );
                    }
                }
            }
        }
        r
    }

    pub fn objects(&self) -> &[Name] {
        &self.objects
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    pub fn arrow(&self, name: &Name) -> Option<&Arrow> {
        self.by_name.get(name).map(|&i| &self.arrows[i])
    }

    pub fn has_object(&self, o: &Name) -> bool {
        self.objects.binary_search(o).is_ok()
    }

    pub fn src(&self, f: &Name) -> &Name {
        &self.arrow(f).expect("arrow").src
    }

    pub fn tgt(&self, f: &Name) -> &Name {
        &self.arrow(f).expect("arrow").tgt
    }

    pub fn id(&self, o: &Name) -> &Name {
        &self.identity[o]
    }

    pub fn is_identity(&self, f: &Name) -> bool {
        let a = self.arrow(f).expect("arrow");
        a.src == a.tgt && self.identity[&a.src] == *f
    }

    /// g after f.
    pub fn comp(&self, g: &Name, f: &Name) -> &Name {
        &self.comp[&(g.clone(), f.clone())]
    }

    pub fn comp_table(&self) -> &BTreeMap<(Name, Name), Name> {
        &self.comp
    }

    pub fn hom(&self, a: &Name, b: &Name) -> Vec<&Arrow> {
        self.arrows
            .iter()
            .filter(|f| f.src == *a && f.tgt == *b)
            .collect()
    }

    /// Final object and, per other object, the unique arrow into it.
    pub fn final_object(&self) -> Option<(Name, BTreeMap<Name, Name>)> {
        'cand: for z in &self.objects {
            let mut to_z = BTreeMap::new();
            for a in &self.objects {
                let hom = self.hom(a, z);
                if hom.len() != 1 {
                    continue 'cand;
                }
                to_z.insert(a.clone(), hom[0].name.clone());
            }
            return Some((z.clone(), to_z));
        }
        None
    }

    pub fn initial_object(&self) -> Option<(Name, BTreeMap<Name, Name>)> {
        self.opposite().final_object()
    }

    pub fn opposite(&self) -> FinCat {
        let arrows = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: a.name.clone(),
                src: a.tgt.clone(),
                tgt: a.src.clone(),
            })
            .collect();
        let comp = self
            .comp
            .iter()
            .map(|((g, f), h)| ((f.clone(), g.clone()), h.clone()))
            .collect();
        FinCat::new_unchecked(self.objects.clone(), arrows, self.identity.clone(), comp)
    }

    pub fn product(&self, other: &FinCat) -> FinCat {
        let objects = self
            .objects
            .iter()
            .flat_map(|a| {
                other
                    .objects
                    .iter()
                    .map(move |b| Name::pair("pr", a.clone(), b.clone()))
            })
            .collect();
        let mut arrows = Vec::new();
        for f in &self.arrows {
            for g in &other.arrows {
                arrows.push(Arrow {
                    name: Name::pair("pr", f.name.clone(), g.name.clone()),
                    src: Name::pair("pr", f.src.clone(), g.src.clone()),
                    tgt: Name::pair("pr", f.tgt.clone(), g.tgt.clone()),
                });
            }
        }
        let identity = self
            .objects
            .iter()
            .flat_map(|a| {
                other.objects.iter().map(move |b| {
                    (
                        Name::pair("pr", a.clone(), b.clone()),
                        Name::pair("pr", self.identity[a].clone(), other.identity[b].clone()),
                    )
                })
            })
            .collect();
        let mut comp = BTreeMap::new();
        for ((g1, f1), h1) in &self.comp {
            for ((g2, f2), h2) in &other.comp {
                comp.insert(
                    (
                        Name::pair("pr", g1.clone(), g2.clone()),
                        Name::pair("pr", f1.clone(), f2.clone()),
                    ),
                    Name::pair("pr", h1.clone(), h2.clone()),
                );
            }
        }
        FinCat::new_unchecked(objects, arrows, identity, comp)
    }

    pub fn coproduct(&self, other: &FinCat) -> FinCat {
        let tagl = |n: &Name| Name::node("inl", vec![n.clone()]);
        let tagr = |n: &Name| Name::node("inr", vec![n.clone()]);
        let mut objects: Vec<Name> = self.objects.iter().map(tagl).collect();
        objects.extend(other.objects.iter().map(tagr));
        let mut arrows: Vec<Arrow> = self
            .arrows
            .iter()
            .map(|a| Arrow {
                name: tagl(&a.name),
                src: tagl(&a.src),
                tgt: tagl(&a.tgt),
            })
            .collect();
        arrows.extend(other.arrows.iter().map(|a| Arrow {
            name: tagr(&a.name),
            src: tagr(&a.src),
            tgt: tagr(&a.tgt),
        }));
        let mut identity: BTreeMap<Name, Name> = self
            .identity
            .iter()
            .map(|(o, i)| (tagl(o), tagl(i)))
            .collect();
        identity.extend(other.identity.iter().map(|(o, i)| (tagr(o), tagr(i))));
        let mut comp: BTreeMap<(Name, Name), Name> = self
            .comp
            .iter()
            .map(|((g, f), h)| ((tagl(g), tagl(f)), tagl(h)))
            .collect();
        comp.extend(
            other
                .comp
                .iter()
                .map(|((g, f), h)| ((tagr(g), tagr(f)), tagr(h))),
        );
        FinCat::new_unchecked(objects, arrows, identity, comp)
    }

    /// Number of objects plus arrows; handy for size guards.
    pub fn size(&self) -> usize {
        self.objects.len() + self.arrows.len()
    }
}

/// The ordinal `[m]` = 0 -> 1 -> ... -> m, with arrows `le(i,j)`.
pub fn ordinal(m: usize) -> FinCat {
    let objects: Vec<Name> = (0..=m as i64).map(Name::num).collect();
    let mut arrows = Vec::new();
    let mut identity = BTreeMap::new();
    for i in 0..=m as i64 {
        for j in i..=m as i64 {
            arrows.push(Arrow {
                name: Name::node("le", vec![Name::num(i), Name::num(j)]),
                src: Name::num(i),
                tgt: Name::num(j),
            });
        }
        identity.insert(
            Name::num(i),
            Name::node("le", vec![Name::num(i), Name::num(i)]),
        );
    }
    let mut comp = BTreeMap::new();
    for i in 0..=m as i64 {
        for j in i..=m as i64 {
            for k in j..=m as i64 {
                comp.insert(
                    (
                        Name::node("le", vec![Name::num(j), Name::num(k)]),
                        Name::node("le", vec![Name::num(i), Name::num(j)]),
                    ),
                    Name::node("le", vec![Name::num(i), Name::num(k)]),
                );
            }
        }
    }
    FinCat::new_unchecked(objects, arrows, identity, comp)
}

pub fn terminal_cat() -> FinCat {
    ordinal(0)
}

/// A monotone map `[m] -> [n]` as explicit values.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct Monotone {
    pub dom: usize,
    pub cod: usize,
    pub values: Vec<usize>,
}

impl Monotone {
    pub fn new(dom: usize, cod: usize, values: Vec<usize>) -> Monotone {
        assert_eq!(values.len(), dom + 1);
        assert!(values.windows(2).all(|w| w[0] <= w[1]));
        assert!(values.iter().all(|&v| v <= cod));
        Monotone { dom, cod, values }
    }

    pub fn identity(m: usize) -> Monotone {
        Monotone::new(m, m, (0..=m).collect())
    }

    pub fn is_identity(&self) -> bool {
        self.dom == self.cod && self.values.iter().enumerate().all(|(i, &v)| i == v)
    }

    pub fn apply(&self, i: usize) -> usize {
        self.values[i]
    }

    /// self after other.
    pub fn compose(&self, other: &Monotone) -> Monotone {
        assert_eq!(other.cod, self.dom);
        Monotone::new(
            other.dom,
            self.cod,
            other.values.iter().map(|&v| self.values[v]).collect(),
        )
    }

    /// Coface `[n-1] -> [n]` skipping `i`.
    pub fn coface(n: usize, i: usize) -> Monotone {
        Monotone::new(n - 1, n, (0..=n).filter(|&v| v != i).collect())
    }

    /// Codegeneracy `[n+1] -> [n]` repeating `i`.
    pub fn codegeneracy(n: usize, i: usize) -> Monotone {
        let mut vals: Vec<usize> = (0..=n).collect();
        vals.insert(i, i);
        Monotone::new(n + 1, n, vals)
    }

    pub fn name(&self) -> Name {
        let mut parts = vec![Name::num(self.dom as i64), Name::num(self.cod as i64)];
        parts.extend(self.values.iter().map(|&v| Name::num(v as i64)));
        Name::node("mono", parts)
    }
}

/// All monotone maps `[m] -> [n]`, in lexicographic order.
pub fn monotone_maps(m: usize, n: usize) -> Vec<Monotone> {
    let mut out = Vec::new();
    let mut cur = vec![0usize; m + 1];
    loop {
        out.push(Monotone::new(m, n, cur.clone()));
        // next weakly-increasing tuple
        let mut i = m + 1;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if cur[i] < n {
                cur[i] += 1;
                for j in i + 1..=m {
                    cur[j] = cur[i];
                }
                break;
            }
        }
    }
}

/// The truncated simplex category with objects `[0], ..., [d]` and all
/// monotone maps.
pub fn delta_leq(d: usize) -> FinCat {
    let objects: Vec<Name> = (0..=d as i64).map(Name::num).collect();
    let mut arrows = Vec::new();
    let mut identity = BTreeMap::new();
    let mut maps: BTreeMap<Name, Monotone> = BTreeMap::new();
    for m in 0..=d {
        for n in 0..=d {
            for mono in monotone_maps(m, n) {
                let name = mono.name();
                arrows.push(Arrow {
                    name: name.clone(),
                    src: Name::num(m as i64),
                    tgt: Name::num(n as i64),
                });
                if mono.is_identity() {
                    identity.insert(Name::num(m as i64), name.clone());
                }
                maps.insert(name, mono);
            }
        }
    }
    let mut comp = BTreeMap::new();
    for (gn, g) in &maps {
        for (fn_, f) in &maps {
            if f.cod == g.dom {
                comp.insert((gn.clone(), fn_.clone()), g.compose(f).name());
            }
        }
    }
    FinCat::new_unchecked(objects, arrows, identity, comp)
}

/// A functor between finite categories, given by total tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CatFunctor {
    pub dom: Arc<FinCat>,
    pub cod: Arc<FinCat>,
    pub on_obj: BTreeMap<Name, Name>,
    pub on_arr: BTreeMap<Name, Name>,
}

impl CatFunctor {
    pub fn new(
        dom: Arc<FinCat>,
        cod: Arc<FinCat>,
        on_obj: BTreeMap<Name, Name>,
        on_arr: BTreeMap<Name, Name>,
    ) -> Result<CatFunctor> {
        let f = CatFunctor {
            dom,
            cod,
            on_obj,
            on_arr,
        };
        let r = f.validate();
        if r.is_empty() {
            Ok(f)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for o in self.dom.objects() {
            match self.on_obj.get(o) {
                None => r.push("functor-total", vec![o.clone()], "object has no image"),
                Some(io) => {
                    if !self.cod.has_object(io) {
                        r.push("functor", vec![o.clone()], "image object not in codomain");
                    }
                }
            }
        }
        for a in self.dom.arrows() {
            match self.on_arr.get(&a.name) {
                None => r.push("functor-total", vec![a.name.clone()], "arrow has no image"),
                Some(ia) => match self.cod.arrow(ia) {
                    None => r.push("functor", vec![a.name.clone()], "image not an arrow"),
                    Some(img) => {
                        if Some(&img.src) != self.on_obj.get(&a.src)
                            || Some(&img.tgt) != self.on_obj.get(&a.tgt)
                        {
                            r.push("functor", vec![a.name.clone()], "src/tgt not preserved");
                        }
                    }
                },
            }
        }
        if !r.is_empty() {
            return r;
        }
        for o in self.dom.objects() {
            if self.on_arr[self.dom.id(o)] != *self.cod.id(&self.on_obj[o]) {
                r.push("functor", vec![o.clone()], "identity not preserved");
            }
        }
        for ((g, f), h) in self.dom.comp_table() {
            let img = self.cod.comp(&self.on_arr[g], &self.on_arr[f]);
            if *img != self.on_arr[h] {
                r.push(
                    "functor",
                    vec![g.clone(), f.clone()],
                    "composition not preserved",
                );
            }
        }
        r
    }

    pub fn identity(c: Arc<FinCat>) -> CatFunctor {
        CatFunctor {
            dom: c.clone(),
            cod: c.clone(),
            on_obj: c.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            on_arr: c
                .arrows()
                .iter()
                .map(|a| (a.name.clone(), a.name.clone()))
                .collect(),
        }
    }

    /// self after other.
    pub fn compose(&self, other: &CatFunctor) -> Result<CatFunctor> {
        if *other.cod != *self.dom {
            return Err(Error::Mismatch {
                what: "functor composition",
                detail: "cod(first) != dom(second)".into(),
            });
        }
        Ok(CatFunctor {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            on_obj: other
                .on_obj
                .iter()
                .map(|(o, i)| (o.clone(), self.on_obj[i].clone()))
                .collect(),
            on_arr: other
                .on_arr
                .iter()
                .map(|(a, i)| (a.clone(), self.on_arr[i].clone()))
                .collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        let obj_img: BTreeSet<&Name> = self.on_obj.values().collect();
        let arr_img: BTreeSet<&Name> = self.on_arr.values().collect();
        obj_img.len() == self.dom.objects().len()
            && obj_img.len() == self.cod.objects().len()
            && arr_img.len() == self.dom.arrows().len()
            && arr_img.len() == self.cod.arrows().len()
    }
}

/// True iff the mapping is a functor and bijective on objects and arrows.
pub fn cat_iso_check(f: &CatFunctor) -> bool {
    f.validate().is_empty() && f.is_bijective()
}

/// A presheaf of finite sets on a finite category: `X : C^op -> Set`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Presheaf {
    pub base: Arc<FinCat>,
    pub at: BTreeMap<Name, Vec<Name>>,
    /// For `f : a -> b`, the restriction `X(b) -> X(a)`.
    pub act: BTreeMap<Name, BTreeMap<Name, Name>>,
}

impl Presheaf {
    pub fn new(
        base: Arc<FinCat>,
        at: BTreeMap<Name, Vec<Name>>,
        act: BTreeMap<Name, BTreeMap<Name, Name>>,
    ) -> Result<Presheaf> {
        let p = Presheaf { base, at, act };
        let r = p.validate();
        if r.is_empty() {
            Ok(p)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for o in self.base.objects() {
            if !self.at.contains_key(o) {
                r.push("presheaf-total", vec![o.clone()], "no value at object");
            }
        }
        for a in self.base.arrows() {
            let Some(m) = self.act.get(&a.name) else {
                r.push("presheaf-total", vec![a.name.clone()], "no action for arrow");
                continue;
            };
            let (Some(xb), Some(xa)) = (self.at.get(&a.tgt), self.at.get(&a.src)) else {
                continue;
            };
            for x in xb {
                match m.get(x) {
                    None => r.push(
                        "presheaf",
                        vec![a.name.clone(), x.clone()],
                        "action not total",
                    ),
                    Some(y) => {
                        if !xa.contains(y) {
                            r.push(
                                "presheaf",
                                vec![a.name.clone(), x.clone()],
                                "action leaves fibre",
                            );
                        }
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        for o in self.base.objects() {
            let idm = &self.act[self.base.id(o)];
            for x in &self.at[o] {
                if idm[x] != *x {
                    r.push("presheaf", vec![o.clone(), x.clone()], "identity acts");
                }
            }
        }
        for ((g, f), h) in self.base.comp_table() {
            // X(g∘f) = X(f) ∘ X(g)
            let gt = &self.base.arrow(g).unwrap().tgt;
            for x in &self.at[gt] {
                let via = &self.act[f][&self.act[g][x]];
                if *via != self.act[h][x] {
                    r.push(
                        "presheaf",
                        vec![g.clone(), f.clone(), x.clone()],
                        "contravariant functoriality fails",
                    );
                }
            }
        }
        r
    }

    /// The terminal presheaf on `base`.
    pub fn terminal(base: Arc<FinCat>) -> Presheaf {
        let star = Name::atom("pt");
        let at = base
            .objects()
            .iter()
            .map(|o| (o.clone(), vec![star.clone()]))
            .collect();
        let act = base
            .arrows()
            .iter()
            .map(|a| {
                (
                    a.name.clone(),
                    [(star.clone(), star.clone())].into_iter().collect(),
                )
            })
            .collect();
        Presheaf { base, at, act }
    }

    /// The representable presheaf at `a`: `Hom(-, a)`.
    pub fn representable(base: Arc<FinCat>, a: &Name) -> Presheaf {
        let at: BTreeMap<Name, Vec<Name>> = base
            .objects()
            .iter()
            .map(|o| {
                (
                    o.clone(),
                    base.hom(o, a).iter().map(|f| f.name.clone()).collect(),
                )
            })
            .collect();
        let act = base
            .arrows()
            .iter()
            .map(|f| {
                let m = at[&f.tgt]
                    .iter()
                    .map(|x| (x.clone(), base.comp(x, &f.name).clone()))
                    .collect();
                (f.name.clone(), m)
            })
            .collect();
        Presheaf { base, at, act }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ordinal_is_valid() {
        for m in 0..=4 {
            assert!(ordinal(m).validate().is_empty());
        }
    }

    #[test]
    fn bad_composite_target_reports_src_tgt() {
        // Two objects, one arrow f : a -> b; comp(id_b, f) deliberately set to id_a.
        let a = Name::atom("a");
        let b = Name::atom("b");
        let f = Name::atom("f");
        let ia = Name::atom("ia");
        let ib = Name::atom("ib");
        let arrows = vec![
            Arrow {
                name: f.clone(),
                src: a.clone(),
                tgt: b.clone(),
            },
            Arrow {
                name: ia.clone(),
                src: a.clone(),
                tgt: a.clone(),
            },
            Arrow {
                name: ib.clone(),
                src: b.clone(),
                tgt: b.clone(),
            },
        ];
        let identity = [(a.clone(), ia.clone()), (b.clone(), ib.clone())]
            .into_iter()
            .collect();
        let comp = [
            ((ia.clone(), ia.clone()), ia.clone()),
            ((ib.clone(), ib.clone()), ib.clone()),
            ((f.clone(), ia.clone()), f.clone()),
            ((ib.clone(), f.clone()), ia.clone()), // wrong target
        ]
        .into_iter()
        .collect();
        let c = FinCat::new_unchecked(vec![a, b], arrows, identity, comp);
        let r = c.validate();
        assert_eq!(r.violations.iter().filter(|v| v.law == "src/tgt").count(), 1);
    }

    #[test]
    fn ordinal_final_object() {
        let c = ordinal(3);
        let (z, _) = c.final_object().unwrap();
        assert_eq!(z, Name::num(3));
        assert_eq!(c.initial_object().unwrap().0, Name::num(0));
    }

    #[test]
    fn monotone_count_matches_binomial() {
        // #monotone [m] -> [n] = C(m+n+1, m+1)
        assert_eq!(monotone_maps(1, 1).len(), 3);
        assert_eq!(monotone_maps(2, 1).len(), 4);
        assert_eq!(monotone_maps(4, 4).len(), 126);
    }

    #[test]
    fn delta_leq_valid_and_has_final_at_zero() {
        let d = delta_leq(2);
        assert!(d.validate().is_empty());
        assert_eq!(d.final_object().unwrap().0, Name::num(0));
    }

    #[test]
    fn product_with_terminal() {
        let c = ordinal(2);
        let p = c.product(&terminal_cat());
        assert!(p.validate().is_empty());
        assert_eq!(p.objects().len(), 3);
        assert_eq!(p.arrows().len(), c.arrows().len());
    }

    #[test]
    fn representable_has_final_element() {
        let base = Arc::new(ordinal(2));
        let x = Presheaf::representable(base, &Name::num(2));
        assert!(x.validate().is_empty());
    }
}
