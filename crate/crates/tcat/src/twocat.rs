//! Finite strict 2-categories in hom-category form.
//!
//! A `TwoCat` is an object set together with a `FinCat` for every ordered pair
//! of objects (its objects are the 1-cells, its arrows the 2-cells) and
//! horizontal-composition tables. Slices and integrations are defined hom-wise
//! in this representation.

use std::collections::{BTreeMap, BTreeSet};

use crate::cat::{Arrow, FinCat};
use crate::error::{Error, Result};
use crate::name::Name;
use crate::validate::ValidationReport;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum DualKind {
    Op,
    Co,
    Coop,
}

impl DualKind {
    pub fn parse(s: &str) -> Option<DualKind> {
        match s {
            "op" => Some(DualKind::Op),
            "co" => Some(DualKind::Co),
            "coop" => Some(DualKind::Coop),
            _ => None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwoCat {
    objects: Vec<Name>,
    homs: BTreeMap<(Name, Name), FinCat>,
    unit1: BTreeMap<Name, Name>,
    /// (g : b -> c, f : a -> b) -> g*f : a -> c
    hcomp1: BTreeMap<(Name, Name), Name>,
    /// (beta, alpha) -> beta*alpha, for horizontally composable 2-cells
    hcomp2: BTreeMap<(Name, Name), Name>,
    one_home: BTreeMap<Name, (Name, Name)>,
    two_home: BTreeMap<Name, (Name, Name)>,
}

impl TwoCat {
    pub fn new(
        objects: Vec<Name>,
        homs: BTreeMap<(Name, Name), FinCat>,
        unit1: BTreeMap<Name, Name>,
        hcomp1: BTreeMap<(Name, Name), Name>,
        hcomp2: BTreeMap<(Name, Name), Name>,
    ) -> Result<TwoCat> {
        let c = Self::new_unchecked(objects, homs, unit1, hcomp1, hcomp2);
        let r = c.validate();
        if r.is_empty() {
            Ok(c)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub(crate) fn new_unchecked(
        mut objects: Vec<Name>,
        mut homs: BTreeMap<(Name, Name), FinCat>,
        unit1: BTreeMap<Name, Name>,
        hcomp1: BTreeMap<(Name, Name), Name>,
        hcomp2: BTreeMap<(Name, Name), Name>,
    ) -> TwoCat {
        objects.sort();
        objects.dedup();
        for a in &objects {
            for b in &objects {
                homs.entry((a.clone(), b.clone()))
                    .or_insert_with(|| FinCat::new_unchecked(vec![], vec![], BTreeMap::new(), BTreeMap::new()));
            }
        }
        let mut one_home = BTreeMap::new();
        let mut two_home = BTreeMap::new();
        for ((a, b), h) in &homs {
            for f in h.objects() {
                one_home.insert(f.clone(), (a.clone(), b.clone()));
            }
            for al in h.arrows() {
                two_home.insert(al.name.clone(), (a.clone(), b.clone()));
            }
        }
        TwoCat {
            objects,
            homs,
            unit1,
            hcomp1,
            hcomp2,
            one_home,
            two_home,
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        // hom categories are themselves valid, cell ids globally unique per level
        let mut ones = BTreeSet::new();
        let mut twos = BTreeSet::new();
        for ((a, b), h) in &self.homs {
            let hr = h.validate();
            for mut v in hr.violations {
                v.cells.insert(0, Name::pair("hom", a.clone(), b.clone()));
                r.violations.push(v);
            }
            for f in h.objects() {
                if !ones.insert(f.clone()) {
                    r.push("unique-id", vec![f.clone()], "duplicate 1-cell id");
                }
            }
            for al in h.arrows() {
                if !twos.insert(al.name.clone()) {
                    r.push("unique-id", vec![al.name.clone()], "duplicate 2-cell id");
                }
            }
        }
        for ((a, b), _) in &self.homs {
            if !self.objects.contains(a) || !self.objects.contains(b) {
                r.push(
                    "src/tgt",
                    vec![a.clone(), b.clone()],
                    "hom over undeclared object",
                );
            }
        }
        for a in &self.objects {
            match self.unit1.get(a) {
                None => r.push("unit", vec![a.clone()], "object has no identity 1-cell"),
                Some(i) => {
                    if self.one_home.get(i) != Some(&(a.clone(), a.clone())) {
                        r.push(
                            "unit",
                            vec![a.clone(), i.clone()],
                            "identity 1-cell not in hom(a,a)",
                        );
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // hcomp1 total exactly on composable pairs; endpoints respected
        for (g, (gb, gc)) in &self.one_home {
            for (f, (fa, fb)) in &self.one_home {
                let key = (g.clone(), f.clone());
                let composable = fb == gb;
                match (composable, self.hcomp1.get(&key)) {
                    (true, None) => r.push(
                        "hcomp-total",
                        vec![g.clone(), f.clone()],
                        "missing horizontal composite of 1-cells",
                    ),
                    (false, Some(_)) => r.push(
                        "hcomp-total",
                        vec![g.clone(), f.clone()],
                        "horizontal composite declared for non-composable 1-cells",
                    ),
                    (true, Some(h)) => {
                        if self.one_home.get(h) != Some(&(fa.clone(), gc.clone())) {
                            r.push(
                                "src/tgt",
                                vec![g.clone(), f.clone(), h.clone()],
                                "horizontal composite has wrong endpoints",
                            );
                        }
                    }
                    (false, None) => {}
                }
            }
        }
        // hcomp2 total exactly on horizontally composable 2-cells
        for (be, (bb, _)) in &self.two_home {
            for (al, (_, ab)) in &self.two_home {
                let key = (be.clone(), al.clone());
                let composable = ab == bb;
                match (composable, self.hcomp2.get(&key)) {
                    (true, None) => r.push(
                        "hcomp-total",
                        vec![be.clone(), al.clone()],
                        "missing horizontal composite of 2-cells",
                    ),
                    (false, Some(_)) => r.push(
                        "hcomp-total",
                        vec![be.clone(), al.clone()],
                        "horizontal composite declared for non-composable 2-cells",
                    ),
                    _ => {}
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // hcomp2 endpoints: beta*alpha : vsrc(beta)*vsrc(alpha) => vtgt(beta)*vtgt(alpha)
        for ((be, al), ga) in &self.hcomp2 {
            let (a, _) = &self.two_home[al];
            let (_, c) = &self.two_home[be];
            let hab = self.hom(a, c);
            match hab.arrow(ga) {
                None => r.push(
                    "src/tgt",
                    vec![be.clone(), al.clone(), ga.clone()],
                    "horizontal composite 2-cell not in expected hom",
                ),
                Some(arr) => {
                    let want_src = &self.hcomp1[&(self.vsrc(be).clone(), self.vsrc(al).clone())];
                    let want_tgt = &self.hcomp1[&(self.vtgt(be).clone(), self.vtgt(al).clone())];
                    if arr.src != *want_src || arr.tgt != *want_tgt {
                        r.push(
                            "src/tgt",
                            vec![be.clone(), al.clone()],
                            "horizontal composite 2-cell has wrong vertical endpoints",
                        );
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // strict units for 1-cells and 2-cells
        for (f, (a, b)) in &self.one_home {
            if self.hcomp1[&(self.unit1[b].clone(), f.clone())] != *f {
                r.push("unit-law", vec![f.clone()], "1_b * f differs from f");
            }
            if self.hcomp1[&(f.clone(), self.unit1[a].clone())] != *f {
                r.push("unit-law", vec![f.clone()], "f * 1_a differs from f");
            }
        }
        for (al, (a, b)) in &self.two_home {
            let ua = self.vid(&self.unit1[a].clone());
            let ub = self.vid(&self.unit1[b].clone());
            if self.hcomp2[&(ub.clone(), al.clone())] != *al {
                r.push("unit-law", vec![al.clone()], "1_{1_b} * alpha differs");
            }
            if self.hcomp2[&(al.clone(), ua.clone())] != *al {
                r.push("unit-law", vec![al.clone()], "alpha * 1_{1_a} differs");
            }
        }
        // hcomp is a functor Hom(b,c) x Hom(a,b) -> Hom(a,c):
        // identities and vertical composition (interchange), exhaustively
        for (g, (gb, _)) in &self.one_home {
            for (f, (_, fb)) in &self.one_home {
                if fb != gb {
                    continue;
                }
                let l = self.hcomp2[&(self.vid(g).clone(), self.vid(f).clone())].clone();
                let want = self.vid(&self.hcomp1[&(g.clone(), f.clone())]).clone();
                if l != want {
                    r.push(
                        "interchange",
                        vec![g.clone(), f.clone()],
                        "1_g * 1_f differs from 1_{g*f}",
                    );
                }
            }
        }
        // interchange, exhaustively: for all vertically composable pairs in
        // hom(b,c) and hom(a,b)
        for ((hb, hc), hbc) in &self.homs {
            for ((ha, hb2), hab) in &self.homs {
                if hb2 != hb {
                    continue;
                }
                let _ = (ha, hc);
                for b1 in hbc.arrows() {
                    for b0 in hbc.arrows() {
                        if b0.tgt != b1.src {
                            continue;
                        }
                        for a1 in hab.arrows() {
                            for a0 in hab.arrows() {
                                if a0.tgt != a1.src {
                                    continue;
                                }
                                let vb = hbc.comp(&b1.name, &b0.name);
                                let va = hab.comp(&a1.name, &a0.name);
                                let lhs = &self.hcomp2[&(vb.clone(), va.clone())];
                                let h1 = &self.hcomp2[&(b1.name.clone(), a1.name.clone())];
                                let h0 = &self.hcomp2[&(b0.name.clone(), a0.name.clone())];
                                let (xa, _) = &self.two_home[&a0.name];
                                let (_, xc) = &self.two_home[&b0.name];
                                let rhs = self.hom(xa, xc).comp(h1, h0);
                                if lhs != rhs {
                                    r.push(
                                        "interchange",
                                        vec![
                                            b1.name.clone(),
                                            b0.name.clone(),
                                            a1.name.clone(),
                                            a0.name.clone(),
                                        ],
                                        "(b1.b0)*(a1.a0) differs from (b1*a1).(b0*a0)",
                                    );
                                }
                            }
                        }
                    }
                }
            }
        }
        // strict associativity of horizontal composition
        let ones: Vec<&Name> = self.one_home.keys().collect();
        for h in &ones {
            for g in &ones {
                if self.one_home[*g].1 != self.one_home[*h].0 {
                    continue;
                }
                for f in &ones {
                    if self.one_home[*f].1 != self.one_home[*g].0 {
                        continue;
                    }
                    let gf = &self.hcomp1[&((*g).clone(), (*f).clone())];
                    let hg = &self.hcomp1[&((*h).clone(), (*g).clone())];
                    if self.hcomp1[&((*h).clone(), gf.clone())]
                        != self.hcomp1[&(hg.clone(), (*f).clone())]
                    {
                        r.push(
                            "assoc",
                            vec![(*h).clone(), (*g).clone(), (*f).clone()],
                            "horizontal composition of 1-cells not associative",
                        );
                    }
                }
            }
        }
        let twos: Vec<&Name> = self.two_home.keys().collect();
        for ga in &twos {
            for be in &twos {
                if self.two_home[*be].1 != self.two_home[*ga].0 {
                    continue;
                }
                for al in &twos {
                    if self.two_home[*al].1 != self.two_home[*be].0 {
                        continue;
                    }
                    let ba = &self.hcomp2[&((*be).clone(), (*al).clone())];
                    let gb = &self.hcomp2[&((*ga).clone(), (*be).clone())];
                    if self.hcomp2[&((*ga).clone(), ba.clone())]
                        != self.hcomp2[&(gb.clone(), (*al).clone())]
                    {
                        r.push(
                            "assoc",
                            vec![(*ga).clone(), (*be).clone(), (*al).clone()],
                            "horizontal composition of 2-cells not associative",
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

    pub fn has_object(&self, o: &Name) -> bool {
        self.objects.binary_search(o).is_ok()
    }

    pub fn hom(&self, a: &Name, b: &Name) -> &FinCat {
        &self.homs[&(a.clone(), b.clone())]
    }

    pub fn homs(&self) -> &BTreeMap<(Name, Name), FinCat> {
        &self.homs
    }

    pub fn one_cells(&self) -> impl Iterator<Item = (&Name, &(Name, Name))> {
        self.one_home.iter()
    }

    pub fn two_cells(&self) -> impl Iterator<Item = (&Name, &(Name, Name))> {
        self.two_home.iter()
    }

    pub fn one_count(&self) -> usize {
        self.one_home.len()
    }

    pub fn two_count(&self) -> usize {
        self.two_home.len()
    }

    pub fn has_one(&self, f: &Name) -> bool {
        self.one_home.contains_key(f)
    }

    pub fn has_two(&self, al: &Name) -> bool {
        self.two_home.contains_key(al)
    }

    /// (src, tgt) objects of a 1-cell.
    pub fn ends1(&self, f: &Name) -> &(Name, Name) {
        &self.one_home[f]
    }

    /// (src, tgt) objects of a 2-cell.
    pub fn ends2(&self, al: &Name) -> &(Name, Name) {
        &self.two_home[al]
    }

    /// Vertical source (a 1-cell) of a 2-cell.
    pub fn vsrc(&self, al: &Name) -> &Name {
        let (a, b) = &self.two_home[al];
        &self.hom(a, b).arrow(al).expect("2-cell").src
    }

    pub fn vtgt(&self, al: &Name) -> &Name {
        let (a, b) = &self.two_home[al];
        &self.hom(a, b).arrow(al).expect("2-cell").tgt
    }

    /// Identity 2-cell of a 1-cell.
    pub fn vid(&self, f: &Name) -> &Name {
        let (a, b) = &self.one_home[f];
        self.hom(a, b).id(f)
    }

    /// Vertical composition: beta after alpha, within one hom-category.
    pub fn vcomp(&self, beta: &Name, alpha: &Name) -> &Name {
        let (a, b) = &self.two_home[alpha];
        self.hom(a, b).comp(beta, alpha)
    }

    pub fn unit1(&self, a: &Name) -> &Name {
        &self.unit1[a]
    }

    pub fn unit2(&self, a: &Name) -> &Name {
        self.vid(&self.unit1[a].clone())
    }

    /// Horizontal composition of 1-cells: g after f.
    pub fn hcomp1(&self, g: &Name, f: &Name) -> &Name {
        &self.hcomp1[&(g.clone(), f.clone())]
    }

    /// Horizontal composition of 2-cells: beta beside alpha.
    pub fn hcomp2(&self, beta: &Name, alpha: &Name) -> &Name {
        &self.hcomp2[&(beta.clone(), alpha.clone())]
    }

    /// Left whiskering g * alpha.
    pub fn whisker_l(&self, g: &Name, alpha: &Name) -> Name {
        self.hcomp2(self.vid(g), alpha).clone()
    }

    /// Right whiskering alpha * f.
    pub fn whisker_r(&self, alpha: &Name, f: &Name) -> Name {
        self.hcomp2(alpha, self.vid(f)).clone()
    }

    pub fn is_identity_two(&self, al: &Name) -> bool {
        let (a, b) = &self.two_home[al];
        self.hom(a, b).is_identity(al)
    }

    pub fn size(&self) -> usize {
        self.objects.len() + self.one_home.len() + self.two_home.len()
    }

    pub fn dual(&self, kind: DualKind) -> TwoCat {
        match kind {
            DualKind::Op => {
                let homs = self
                    .homs
                    .iter()
                    .map(|((a, b), h)| ((b.clone(), a.clone()), h.clone()))
                    .collect();
                let hcomp1 = self
                    .hcomp1
                    .iter()
                    .map(|((g, f), h)| ((f.clone(), g.clone()), h.clone()))
                    .collect();
                let hcomp2 = self
                    .hcomp2
                    .iter()
                    .map(|((b, a), c)| ((a.clone(), b.clone()), c.clone()))
                    .collect();
                TwoCat::new_unchecked(
                    self.objects.clone(),
                    homs,
                    self.unit1.clone(),
                    hcomp1,
                    hcomp2,
                )
            }
            DualKind::Co => {
                let homs = self
                    .homs
                    .iter()
                    .map(|(k, h)| (k.clone(), h.opposite()))
                    .collect();
                TwoCat::new_unchecked(
                    self.objects.clone(),
                    homs,
                    self.unit1.clone(),
                    self.hcomp1.clone(),
                    self.hcomp2.clone(),
                )
            }
            DualKind::Coop => self.dual(DualKind::Op).dual(DualKind::Co),
        }
    }

    pub fn product(&self, other: &TwoCat) -> TwoCat {
        let pr = |x: &Name, y: &Name| Name::pair("pr", x.clone(), y.clone());
        let objects: Vec<Name> = self
            .objects
            .iter()
            .flat_map(|a| other.objects.iter().map(move |b| pr(a, b)))
            .collect();
        let mut homs = BTreeMap::new();
        for ((a1, b1), h1) in &self.homs {
            for ((a2, b2), h2) in &other.homs {
                homs.insert((pr(a1, a2), pr(b1, b2)), h1.product(h2));
            }
        }
        let unit1 = self
            .objects
            .iter()
            .flat_map(|a| {
                other
                    .objects
                    .iter()
                    .map(move |b| (pr(a, b), pr(&self.unit1[a], &other.unit1[b])))
            })
            .collect();
        let mut hcomp1 = BTreeMap::new();
        for ((g1, f1), h1) in &self.hcomp1 {
            for ((g2, f2), h2) in &other.hcomp1 {
                hcomp1.insert((pr(g1, g2), pr(f1, f2)), pr(h1, h2));
            }
        }
        let mut hcomp2 = BTreeMap::new();
        for ((b1, a1), c1) in &self.hcomp2 {
            for ((b2, a2), c2) in &other.hcomp2 {
                hcomp2.insert((pr(b1, b2), pr(a1, a2)), pr(c1, c2));
            }
        }
        TwoCat::new_unchecked(objects, homs, unit1, hcomp1, hcomp2)
    }

    pub fn coproduct(&self, other: &TwoCat) -> TwoCat {
        let tl = |n: &Name| Name::node("inl", vec![n.clone()]);
        let tr = |n: &Name| Name::node("inr", vec![n.clone()]);
        let retag = |c: &FinCat, tag: &dyn Fn(&Name) -> Name| {
            FinCat::new_unchecked(
                c.objects().iter().map(|o| tag(o)).collect(),
                c.arrows()
                    .iter()
                    .map(|a| Arrow {
                        name: tag(&a.name),
                        src: tag(&a.src),
                        tgt: tag(&a.tgt),
                    })
                    .collect(),
                c.objects()
                    .iter()
                    .map(|o| (tag(o), tag(c.id(o))))
                    .collect(),
                c.comp_table()
                    .iter()
                    .map(|((g, f), h)| ((tag(g), tag(f)), tag(h)))
                    .collect(),
            )
        };
        let mut objects: Vec<Name> = self.objects.iter().map(|o| tl(o)).collect();
        objects.extend(other.objects.iter().map(|o| tr(o)));
        let mut homs = BTreeMap::new();
        for ((a, b), h) in &self.homs {
            homs.insert((tl(a), tl(b)), retag(h, &tl));
        }
        for ((a, b), h) in &other.homs {
            homs.insert((tr(a), tr(b)), retag(h, &tr));
        }
        let mut unit1: BTreeMap<Name, Name> =
            self.unit1.iter().map(|(o, i)| (tl(o), tl(i))).collect();
        unit1.extend(other.unit1.iter().map(|(o, i)| (tr(o), tr(i))));
        let mut hcomp1: BTreeMap<(Name, Name), Name> = self
            .hcomp1
            .iter()
            .map(|((g, f), h)| ((tl(g), tl(f)), tl(h)))
            .collect();
        hcomp1.extend(
            other
                .hcomp1
                .iter()
                .map(|((g, f), h)| ((tr(g), tr(f)), tr(h))),
        );
        let mut hcomp2: BTreeMap<(Name, Name), Name> = self
            .hcomp2
            .iter()
            .map(|((b, a), c)| ((tl(b), tl(a)), tl(c)))
            .collect();
        hcomp2.extend(
            other
                .hcomp2
                .iter()
                .map(|((b, a), c)| ((tr(b), tr(a)), tr(c))),
        );
        TwoCat::new_unchecked(objects, homs, unit1, hcomp1, hcomp2)
    }
}

/// The terminal 2-category: one object, one 1-cell, one 2-cell.
pub fn terminal() -> TwoCat {
    from_cat(&crate::cat::terminal_cat())
}

pub fn empty() -> TwoCat {
    TwoCat::new_unchecked(
        vec![],
        BTreeMap::new(),
        BTreeMap::new(),
        BTreeMap::new(),
        BTreeMap::new(),
    )
}

/// A category seen as a 2-category with only identity 2-cells.
pub fn from_cat(c: &FinCat) -> TwoCat {
    let mut homs = BTreeMap::new();
    for a in c.objects() {
        for b in c.objects() {
            let ones: Vec<Name> = c.hom(a, b).iter().map(|f| f.name.clone()).collect();
            let arrows = ones
                .iter()
                .map(|f| Arrow {
                    name: Name::node("id2", vec![f.clone()]),
                    src: f.clone(),
                    tgt: f.clone(),
                })
                .collect();
            let identity = ones
                .iter()
                .map(|f| (f.clone(), Name::node("id2", vec![f.clone()])))
                .collect();
            let comp = ones
                .iter()
                .map(|f| {
                    let i = Name::node("id2", vec![f.clone()]);
                    ((i.clone(), i.clone()), i)
                })
                .collect();
            homs.insert(
                (a.clone(), b.clone()),
                FinCat::new_unchecked(ones, arrows, identity, comp),
            );
        }
    }
    let unit1 = c
        .objects()
        .iter()
        .map(|o| (o.clone(), c.id(o).clone()))
        .collect();
    let hcomp1: BTreeMap<(Name, Name), Name> = c.comp_table().clone();
    let hcomp2 = c
        .comp_table()
        .iter()
        .map(|((g, f), h)| {
            (
                (
                    Name::node("id2", vec![g.clone()]),
                    Name::node("id2", vec![f.clone()]),
                ),
                Name::node("id2", vec![h.clone()]),
            )
        })
        .collect();
    TwoCat::new_unchecked(c.objects().to_vec(), homs, unit1, hcomp1, hcomp2)
}

/// Forgets the 2-cells.
pub fn underlying_cat(t: &TwoCat) -> FinCat {
    let mut arrows = Vec::new();
    for (f, (a, b)) in t.one_cells() {
        arrows.push(Arrow {
            name: f.clone(),
            src: a.clone(),
            tgt: b.clone(),
        });
    }
    let identity = t
        .objects()
        .iter()
        .map(|o| (o.clone(), t.unit1(o).clone()))
        .collect();
    let mut comp = BTreeMap::new();
    for (g, (_, _)) in t.one_cells() {
        for (f, (_, fb)) in t.one_cells() {
            if *fb == t.ends1(g).0 {
                comp.insert((g.clone(), f.clone()), t.hcomp1(g, f).clone());
            }
        }
    }
    FinCat::new_unchecked(t.objects().to_vec(), arrows, identity, comp)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;

    #[test]
    fn terminal_validates_empty_report() {
        assert!(terminal().validate().is_empty());
        assert!(empty().validate().is_empty());
    }

    #[test]
    fn from_cat_round_trip() {
        for m in 0..=3 {
            let c = ordinal(m);
            let t = from_cat(&c);
            assert!(t.validate().is_empty());
            assert_eq!(underlying_cat(&t), c);
        }
    }

    #[test]
    fn duals_are_involutions() {
        let t = from_cat(&ordinal(2));
        for k in [DualKind::Op, DualKind::Co, DualKind::Coop] {
            assert_eq!(t.dual(k).dual(k), t);
            assert!(t.dual(k).validate().is_empty());
        }
        // coop = co of op, cell-for-cell
        assert_eq!(
            t.dual(DualKind::Coop),
            t.dual(DualKind::Op).dual(DualKind::Co)
        );
    }

    #[test]
    fn terminal_dual_fixed() {
        let e = terminal();
        assert_eq!(e.dual(DualKind::Op), e);
    }

    #[test]
    fn product_counts() {
        let a = from_cat(&ordinal(1));
        let p = a.product(&a);
        assert!(p.validate().is_empty());
        assert_eq!(p.objects().len(), 4);
    }

    #[test]
    fn from_cat_hom_of_arrow_is_terminal_cat() {
        let t = from_cat(&ordinal(1));
        let h = t.hom(&Name::num(0), &Name::num(1));
        assert_eq!(h.objects().len(), 1);
        assert_eq!(h.arrows().len(), 1);
    }
}
