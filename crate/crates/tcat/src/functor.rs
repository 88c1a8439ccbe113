//! Strict, lax and colax 2-functors, and transformations between them.
//!
//! Structural cells are stored as total tables over composable pairs, so
//! coherence checking is pure table lookup. The lax-transformation coherence
//! equations are not spelled out in the source material beyond "the well-known
//! conditions"; the standard equations are implemented here (naturality,
//! composition and unit compatibility) and exercised exhaustively by tests.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::name::Name;
use crate::twocat::{DualKind, TwoCat};
use crate::validate::ValidationReport;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StrictTwoFunctor {
    pub dom: Arc<TwoCat>,
    pub cod: Arc<TwoCat>,
    pub on_obj: BTreeMap<Name, Name>,
    pub on_one: BTreeMap<Name, Name>,
    pub on_two: BTreeMap<Name, Name>,
}

impl StrictTwoFunctor {
    pub fn new(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_obj: BTreeMap<Name, Name>,
        on_one: BTreeMap<Name, Name>,
        on_two: BTreeMap<Name, Name>,
    ) -> Result<StrictTwoFunctor> {
        let u = StrictTwoFunctor {
            dom,
            cod,
            on_obj,
            on_one,
            on_two,
        };
        let r = u.validate();
        if r.is_empty() {
            Ok(u)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn identity(c: Arc<TwoCat>) -> StrictTwoFunctor {
        StrictTwoFunctor {
            dom: c.clone(),
            cod: c.clone(),
            on_obj: c.objects().iter().map(|o| (o.clone(), o.clone())).collect(),
            on_one: c.one_cells().map(|(f, _)| (f.clone(), f.clone())).collect(),
            on_two: c.two_cells().map(|(t, _)| (t.clone(), t.clone())).collect(),
        }
    }

    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        self.check_totality(&mut r);
        if !r.is_empty() {
            return r;
        }
        self.check_local_functors(&mut r);
        // strict preservation of units and horizontal composition
        for a in self.dom.objects() {
            if self.on_one[self.dom.unit1(a)] != *self.cod.unit1(&self.on_obj[a]) {
                r.push("strict", vec![a.clone()], "identity 1-cell not preserved");
            }
        }
        for ((g, f), h) in dom_hcomp1(&self.dom) {
            let img = self.cod.hcomp1(&self.on_one[&g], &self.on_one[&f]);
            if *img != self.on_one[&h] {
                r.push("strict", vec![g, f], "horizontal composition of 1-cells not preserved");
            }
        }
        for ((b, a), c) in dom_hcomp2(&self.dom) {
            let img = self.cod.hcomp2(&self.on_two[&b], &self.on_two[&a]);
            if *img != self.on_two[&c] {
                r.push("strict", vec![b, a], "horizontal composition of 2-cells not preserved");
            }
        }
        r
    }

    fn check_totality(&self, r: &mut ValidationReport) {
        for o in self.dom.objects() {
            match self.on_obj.get(o) {
                None => r.push("total", vec![o.clone()], "object has no image"),
                Some(i) if !self.cod.has_object(i) => {
                    r.push("image", vec![o.clone()], "image object not in codomain")
                }
                _ => {}
            }
        }
        for (f, (a, b)) in self.dom.one_cells() {
            match self.on_one.get(f) {
                None => r.push("total", vec![f.clone()], "1-cell has no image"),
                Some(i) => {
                    if !self.cod.has_one(i) {
                        r.push("image", vec![f.clone()], "image 1-cell not in codomain");
                    } else {
                        let (ia, ib) = self.cod.ends1(i);
                        if Some(ia) != self.on_obj.get(a) || Some(ib) != self.on_obj.get(b) {
                            r.push("image", vec![f.clone()], "1-cell endpoints not preserved");
                        }
                    }
                }
            }
        }
        for (t, _) in self.dom.two_cells() {
            match self.on_two.get(t) {
                None => r.push("total", vec![t.clone()], "2-cell has no image"),
                Some(i) => {
                    if !self.cod.has_two(i) {
                        r.push("image", vec![t.clone()], "image 2-cell not in codomain");
                    } else {
                        let s = &self.on_one[self.dom.vsrc(t)];
                        let g = &self.on_one[self.dom.vtgt(t)];
                        if self.cod.vsrc(i) != s || self.cod.vtgt(i) != g {
                            r.push("image", vec![t.clone()], "2-cell boundary not preserved");
                        }
                    }
                }
            }
        }
    }

    fn check_local_functors(&self, r: &mut ValidationReport) {
        // each Hom(a,b) -> Hom(ua,ub) preserves vertical identities and composition
        for (f, _) in self.dom.one_cells() {
            if self.on_two[self.dom.vid(f)] != *self.cod.vid(&self.on_one[f]) {
                r.push("local-functor", vec![f.clone()], "identity 2-cell not preserved");
            }
        }
        for ((_, _), h) in self.dom.homs() {
            for b in h.arrows() {
                for a in h.arrows() {
                    if a.tgt != b.src {
                        continue;
                    }
                    let vc = h.comp(&b.name, &a.name);
                    let img = self
                        .cod
                        .vcomp(&self.on_two[&b.name], &self.on_two[&a.name]);
                    if *img != self.on_two[vc] {
                        r.push(
                            "local-functor",
                            vec![b.name.clone(), a.name.clone()],
                            "vertical composition not preserved",
                        );
                    }
                }
            }
        }
    }

    pub fn obj(&self, a: &Name) -> &Name {
        &self.on_obj[a]
    }

    pub fn one(&self, f: &Name) -> &Name {
        &self.on_one[f]
    }

    pub fn two(&self, t: &Name) -> &Name {
        &self.on_two[t]
    }

    /// self after other.
    pub fn compose(&self, other: &StrictTwoFunctor) -> Result<StrictTwoFunctor> {
        if *other.cod != *self.dom {
            return Err(Error::Mismatch {
                what: "2-functor composition",
                detail: "cod(first) != dom(second)".into(),
            });
        }
        Ok(StrictTwoFunctor {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            on_obj: other
                .on_obj
                .iter()
                .map(|(k, v)| (k.clone(), self.on_obj[v].clone()))
                .collect(),
            on_one: other
                .on_one
                .iter()
                .map(|(k, v)| (k.clone(), self.on_one[v].clone()))
                .collect(),
            on_two: other
                .on_two
                .iter()
                .map(|(k, v)| (k.clone(), self.on_two[v].clone()))
                .collect(),
        })
    }

    pub fn is_bijective(&self) -> bool {
        let io: BTreeSet<_> = self.on_obj.values().collect();
        let i1: BTreeSet<_> = self.on_one.values().collect();
        let i2: BTreeSet<_> = self.on_two.values().collect();
        io.len() == self.dom.objects().len()
            && io.len() == self.cod.objects().len()
            && i1.len() == self.dom.one_count()
            && i1.len() == self.cod.one_count()
            && i2.len() == self.dom.two_count()
            && i2.len() == self.cod.two_count()
    }

    /// The same tables as a functor between duals.
    pub fn dual(&self, kind: DualKind) -> StrictTwoFunctor {
        StrictTwoFunctor {
            dom: Arc::new(self.dom.dual(kind)),
            cod: Arc::new(self.cod.dual(kind)),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
        }
    }

    pub fn as_lax(&self) -> LaxTwoFunctor {
        let comp_cell = composable_pairs(&self.dom)
            .into_iter()
            .map(|(fp, f)| {
                let img = self.cod.hcomp1(&self.on_one[&fp], &self.on_one[&f]);
                ((fp, f), self.cod.vid(img).clone())
            })
            .collect();
        let unit_cell = self
            .dom
            .objects()
            .iter()
            .map(|a| {
                (
                    a.clone(),
                    self.cod.vid(self.cod.unit1(&self.on_obj[a])).clone(),
                )
            })
            .collect();
        LaxTwoFunctor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
            comp_cell,
            unit_cell,
        }
    }

    pub fn as_colax(&self) -> ColaxTwoFunctor {
        let l = self.as_lax();
        ColaxTwoFunctor {
            dom: l.dom,
            cod: l.cod,
            on_obj: l.on_obj,
            on_one: l.on_one,
            on_two: l.on_two,
            comp_cell: l.comp_cell,
            unit_cell: l.unit_cell,
        }
    }
}

/// All composable 1-cell pairs (f', f) of a 2-category, f' after f.
pub fn composable_pairs(c: &TwoCat) -> Vec<(Name, Name)> {
    let mut out = Vec::new();
    for (fp, (b2, _)) in c.one_cells() {
        for (f, (_, b)) in c.one_cells() {
            if b == b2 {
                out.push((fp.clone(), f.clone()));
            }
        }
    }
    out.sort();
    out
}

fn dom_hcomp1(c: &TwoCat) -> Vec<((Name, Name), Name)> {
    composable_pairs(c)
        .into_iter()
        .map(|(g, f)| {
            let h = c.hcomp1(&g, &f).clone();
            ((g, f), h)
        })
        .collect()
}

fn dom_hcomp2(c: &TwoCat) -> Vec<((Name, Name), Name)> {
    let mut out = Vec::new();
    for (b, (bb, _)) in c.two_cells() {
        for (a, (_, ab)) in c.two_cells() {
            if ab == bb {
                out.push(((b.clone(), a.clone()), c.hcomp2(b, a).clone()));
            }
        }
    }
    out
}

/// A lax 2-functor: composition cells `u(f')u(f) => u(f'f)` and unit cells
/// `1_{u(a)} => u(1_a)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaxTwoFunctor {
    pub dom: Arc<TwoCat>,
    pub cod: Arc<TwoCat>,
    pub on_obj: BTreeMap<Name, Name>,
    pub on_one: BTreeMap<Name, Name>,
    pub on_two: BTreeMap<Name, Name>,
    pub comp_cell: BTreeMap<(Name, Name), Name>,
    pub unit_cell: BTreeMap<Name, Name>,
}

/// A colax 2-functor: cells reversed, `u(f'f) => u(f')u(f)` and `u(1_a) => 1_{u(a)}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ColaxTwoFunctor {
    pub dom: Arc<TwoCat>,
    pub cod: Arc<TwoCat>,
    pub on_obj: BTreeMap<Name, Name>,
    pub on_one: BTreeMap<Name, Name>,
    pub on_two: BTreeMap<Name, Name>,
    pub comp_cell: BTreeMap<(Name, Name), Name>,
    pub unit_cell: BTreeMap<Name, Name>,
}

impl LaxTwoFunctor {
    pub fn new(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_obj: BTreeMap<Name, Name>,
        on_one: BTreeMap<Name, Name>,
        on_two: BTreeMap<Name, Name>,
        comp_cell: BTreeMap<(Name, Name), Name>,
        unit_cell: BTreeMap<Name, Name>,
    ) -> Result<LaxTwoFunctor> {
        let u = LaxTwoFunctor {
            dom,
            cod,
            on_obj,
            on_one,
            on_two,
            comp_cell,
            unit_cell,
        };
        let r = u.check_coherence();
        if r.is_empty() {
            Ok(u)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn obj(&self, a: &Name) -> &Name {
        &self.on_obj[a]
    }

    pub fn one(&self, f: &Name) -> &Name {
        &self.on_one[f]
    }

    pub fn two(&self, t: &Name) -> &Name {
        &self.on_two[t]
    }

    pub fn check_coherence(&self) -> ValidationReport {
        lax_coherence(
            &self.dom,
            &self.cod,
            &self.on_obj,
            &self.on_one,
            &self.on_two,
            &self.comp_cell,
            &self.unit_cell,
            CellDirection::Lax,
        )
    }

    /// Normalized: unit cells are identities and composition cells with an
    /// identity factor are identities.
    pub fn is_normalized(&self) -> bool {
        for a in self.dom.objects() {
            if !self.cod.is_identity_two(&self.unit_cell[a]) {
                return false;
            }
        }
        for ((fp, f), cell) in &self.comp_cell {
            let fp_id = self.dom.has_one(fp) && {
                let (a, b) = self.dom.ends1(fp);
                a == b && self.dom.unit1(a) == fp
            };
            let f_id = {
                let (a, b) = self.dom.ends1(f);
                a == b && self.dom.unit1(a) == f
            };
            if (fp_id || f_id) && !self.cod.is_identity_two(cell) {
                return false;
            }
        }
        true
    }

    pub fn is_strict(&self) -> bool {
        self.unit_cell
            .values()
            .all(|c| self.cod.is_identity_two(c))
            && self
                .comp_cell
                .values()
                .all(|c| self.cod.is_identity_two(c))
    }

    pub fn to_strict(&self) -> Option<StrictTwoFunctor> {
        if !self.is_strict() {
            return None;
        }
        Some(StrictTwoFunctor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
        })
    }

    /// self after other, structural cells by the standard pasting.
    pub fn compose(&self, other: &LaxTwoFunctor) -> Result<LaxTwoFunctor> {
        if *other.cod != *self.dom {
            return Err(Error::Mismatch {
                what: "lax 2-functor composition",
                detail: "cod(first) != dom(second)".into(),
            });
        }
        let on_obj: BTreeMap<Name, Name> = other
            .on_obj
            .iter()
            .map(|(k, v)| (k.clone(), self.on_obj[v].clone()))
            .collect();
        let on_one: BTreeMap<Name, Name> = other
            .on_one
            .iter()
            .map(|(k, v)| (k.clone(), self.on_one[v].clone()))
            .collect();
        let on_two: BTreeMap<Name, Name> = other
            .on_two
            .iter()
            .map(|(k, v)| (k.clone(), self.on_two[v].clone()))
            .collect();
        // (v u)_{f',f} = v(u_{f',f}) . v_{u(f'),u(f)}
        let comp_cell = other
            .comp_cell
            .iter()
            .map(|((fp, f), ucell)| {
                let v_cell = &self.comp_cell[&(other.on_one[fp].clone(), other.on_one[f].clone())];
                let vu = self.cod.vcomp(&self.on_two[ucell], v_cell).clone();
                ((fp.clone(), f.clone()), vu)
            })
            .collect();
        // (v u)_a = v(u_a) . v_{u(a)}
        let unit_cell = other
            .unit_cell
            .iter()
            .map(|(a, ucell)| {
                let v_unit = &self.unit_cell[&other.on_obj[a]];
                let vu = self.cod.vcomp(&self.on_two[ucell], v_unit).clone();
                (a.clone(), vu)
            })
            .collect();
        Ok(LaxTwoFunctor {
            dom: other.dom.clone(),
            cod: self.cod.clone(),
            on_obj,
            on_one,
            on_two,
            comp_cell,
            unit_cell,
        })
    }

    /// The co-dual of a lax functor is colax: same tables between co-duals.
    pub fn co_dual(&self) -> ColaxTwoFunctor {
        ColaxTwoFunctor {
            dom: Arc::new(self.dom.dual(DualKind::Co)),
            cod: Arc::new(self.cod.dual(DualKind::Co)),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
            comp_cell: self.comp_cell.clone(),
            unit_cell: self.unit_cell.clone(),
        }
    }

    /// The op-dual of a lax functor is lax, with composition cells transposed.
    pub fn op_dual(&self) -> LaxTwoFunctor {
        LaxTwoFunctor {
            dom: Arc::new(self.dom.dual(DualKind::Op)),
            cod: Arc::new(self.cod.dual(DualKind::Op)),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
            comp_cell: self
                .comp_cell
                .iter()
                .map(|((fp, f), c)| ((f.clone(), fp.clone()), c.clone()))
                .collect(),
            unit_cell: self.unit_cell.clone(),
        }
    }
}

impl ColaxTwoFunctor {
    pub fn new(
        dom: Arc<TwoCat>,
        cod: Arc<TwoCat>,
        on_obj: BTreeMap<Name, Name>,
        on_one: BTreeMap<Name, Name>,
        on_two: BTreeMap<Name, Name>,
        comp_cell: BTreeMap<(Name, Name), Name>,
        unit_cell: BTreeMap<Name, Name>,
    ) -> Result<ColaxTwoFunctor> {
        let u = ColaxTwoFunctor {
            dom,
            cod,
            on_obj,
            on_one,
            on_two,
            comp_cell,
            unit_cell,
        };
        let r = u.check_coherence();
        if r.is_empty() {
            Ok(u)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn check_coherence(&self) -> ValidationReport {
        lax_coherence(
            &self.dom,
            &self.cod,
            &self.on_obj,
            &self.on_one,
            &self.on_two,
            &self.comp_cell,
            &self.unit_cell,
            CellDirection::Colax,
        )
    }

    /// The co-dual of a colax functor is lax.
    pub fn co_dual(&self) -> LaxTwoFunctor {
        LaxTwoFunctor {
            dom: Arc::new(self.dom.dual(DualKind::Co)),
            cod: Arc::new(self.cod.dual(DualKind::Co)),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
            comp_cell: self.comp_cell.clone(),
            unit_cell: self.unit_cell.clone(),
        }
    }

    pub fn obj(&self, a: &Name) -> &Name {
        &self.on_obj[a]
    }

    pub fn one(&self, f: &Name) -> &Name {
        &self.on_one[f]
    }

    pub fn is_strict(&self) -> bool {
        self.unit_cell
            .values()
            .all(|c| self.cod.is_identity_two(c))
            && self
                .comp_cell
                .values()
                .all(|c| self.cod.is_identity_two(c))
    }

    pub fn to_strict(&self) -> Option<StrictTwoFunctor> {
        if !self.is_strict() {
            return None;
        }
        Some(StrictTwoFunctor {
            dom: self.dom.clone(),
            cod: self.cod.clone(),
            on_obj: self.on_obj.clone(),
            on_one: self.on_one.clone(),
            on_two: self.on_two.clone(),
        })
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum CellDirection {
    Lax,
    Colax,
}

#[allow(clippy::too_many_arguments)]
fn lax_coherence(
    dom: &TwoCat,
    cod: &TwoCat,
    on_obj: &BTreeMap<Name, Name>,
    on_one: &BTreeMap<Name, Name>,
    on_two: &BTreeMap<Name, Name>,
    comp_cell: &BTreeMap<(Name, Name), Name>,
    unit_cell: &BTreeMap<Name, Name>,
    dir: CellDirection,
) -> ValidationReport {
    let mut r = ValidationReport::new();
    // totality + boundary preservation of the three maps, reusing the strict checks
    let skeleton = StrictTwoFunctor {
        dom: Arc::new(dom.clone()),
        cod: Arc::new(cod.clone()),
        on_obj: on_obj.clone(),
        on_one: on_one.clone(),
        on_two: on_two.clone(),
    };
    skeleton.check_totality(&mut r);
    if !r.is_empty() {
        return r;
    }
    skeleton.check_local_functors(&mut r);

    // structural cell boundaries
    for a in dom.objects() {
        let ua = &on_obj[a];
        match unit_cell.get(a) {
            None => r.push("lax-total", vec![a.clone()], "missing unit cell"),
            Some(c) => {
                if !cod.has_two(c) {
                    r.push("lax-cell", vec![a.clone()], "unit cell not a 2-cell");
                    continue;
                }
                let (want_src, want_tgt) = match dir {
                    CellDirection::Lax => (cod.unit1(ua), &on_one[dom.unit1(a)]),
                    CellDirection::Colax => (&on_one[dom.unit1(a)], cod.unit1(ua)),
                };
                if cod.vsrc(c) != want_src || cod.vtgt(c) != want_tgt {
                    r.push("lax-cell", vec![a.clone(), c.clone()], "unit cell boundary wrong");
                }
            }
        }
    }
    for (fp, f) in composable_pairs(dom) {
        let key = (fp.clone(), f.clone());
        match comp_cell.get(&key) {
            None => r.push("lax-total", vec![fp, f], "missing composition cell"),
            Some(c) => {
                if !cod.has_two(c) {
                    r.push("lax-cell", vec![fp, f], "composition cell not a 2-cell");
                    continue;
                }
                let side_comp = cod.hcomp1(&on_one[&fp], &on_one[&f]).clone();
                let side_img = on_one[dom.hcomp1(&fp, &f)].clone();
                let (want_src, want_tgt) = match dir {
                    CellDirection::Lax => (side_comp, side_img),
                    CellDirection::Colax => (side_img, side_comp),
                };
                if *cod.vsrc(c) != want_src || *cod.vtgt(c) != want_tgt {
                    r.push(
                        "lax-cell",
                        vec![fp, f, c.clone()],
                        "composition cell boundary wrong",
                    );
                }
            }
        }
    }
    if !r.is_empty() {
        return r;
    }

    // naturality of the composition cells in both arguments:
    // lax:   u(b * a) . comp(f',f) = comp(g',g) . (u(b) * u(a))
    // colax: comp(g',g) . u(b * a) = (u(b) * u(a)) . comp(f',f)
    for (bp, (m, _)) in dom.two_cells() {
        for (al, (_, m2)) in dom.two_cells() {
            if m2 != m {
                continue;
            }
            let (fp, f) = (dom.vsrc(bp).clone(), dom.vsrc(al).clone());
            let (gp, g) = (dom.vtgt(bp).clone(), dom.vtgt(al).clone());
            let ba = dom.hcomp2(bp, al);
            let u_ba = &on_two[ba];
            let u_b_u_a = cod.hcomp2(&on_two[bp], &on_two[al]).clone();
            let (lhs, rhs) = match dir {
                CellDirection::Lax => (
                    cod.vcomp(u_ba, &comp_cell[&(fp.clone(), f.clone())])
                        .clone(),
                    cod.vcomp(&comp_cell[&(gp.clone(), g.clone())], &u_b_u_a)
                        .clone(),
                ),
                CellDirection::Colax => (
                    cod.vcomp(&comp_cell[&(gp.clone(), g.clone())], u_ba).clone(),
                    cod.vcomp(&u_b_u_a, &comp_cell[&(fp.clone(), f.clone())])
                        .clone(),
                ),
            };
            if lhs != rhs {
                r.push(
                    "lax-naturality",
                    vec![bp.clone(), al.clone()],
                    "composition cell not natural",
                );
            }
        }
    }

    // associativity coherence over composable triples
    for (fpp, (c3, _)) in dom.one_cells() {
        for (fp, (b2, c2)) in dom.one_cells() {
            if c2 != c3 {
                continue;
            }
            for (f, (_, b)) in dom.one_cells() {
                if b != b2 {
                    continue;
                }
                let fp_f = dom.hcomp1(fp, f).clone();
                let fpp_fp = dom.hcomp1(fpp, fp).clone();
                match dir {
                    CellDirection::Lax => {
                        // comp(f'', f'f) . (u(f'') * comp(f',f)) = comp(f''f', f) . (comp(f'',f') * u(f))
                        let l1 = cod.whisker_l(&on_one[fpp], &comp_cell[&(fp.clone(), f.clone())]);
                        let lhs = cod
                            .vcomp(&comp_cell[&(fpp.clone(), fp_f.clone())], &l1)
                            .clone();
                        let r1 = cod.whisker_r(&comp_cell[&(fpp.clone(), fp.clone())], &on_one[f]);
                        let rhs = cod
                            .vcomp(&comp_cell[&(fpp_fp.clone(), f.clone())], &r1)
                            .clone();
                        if lhs != rhs {
                            r.push(
                                "lax-assoc",
                                vec![fpp.clone(), fp.clone(), f.clone()],
                                "associativity coherence fails",
                            );
                        }
                    }
                    CellDirection::Colax => {
                        let l1 = cod.whisker_l(&on_one[fpp], &comp_cell[&(fp.clone(), f.clone())]);
                        let lhs = cod
                            .vcomp(&l1, &comp_cell[&(fpp.clone(), fp_f.clone())])
                            .clone();
                        let r1 = cod.whisker_r(&comp_cell[&(fpp.clone(), fp.clone())], &on_one[f]);
                        let rhs = cod
                            .vcomp(&r1, &comp_cell[&(fpp_fp.clone(), f.clone())])
                            .clone();
                        if lhs != rhs {
                            r.push(
                                "lax-assoc",
                                vec![fpp.clone(), fp.clone(), f.clone()],
                                "associativity coherence fails",
                            );
                        }
                    }
                }
            }
        }
    }

    // unit coherence
    for (f, (a, b)) in dom.one_cells() {
        let ia = dom.unit1(a).clone();
        let ib = dom.unit1(b).clone();
        match dir {
            CellDirection::Lax => {
                // comp(f, 1_a) . (u(f) * unit(a)) = 1_{u(f)}
                let w = cod.whisker_l(&on_one[f], &unit_cell[a]);
                let lhs = cod.vcomp(&comp_cell[&(f.clone(), ia)], &w).clone();
                if lhs != *cod.vid(&on_one[f]) {
                    r.push("lax-unit", vec![f.clone()], "right unit coherence fails");
                }
                let w = cod.whisker_r(&unit_cell[b], &on_one[f]);
                let lhs = cod.vcomp(&comp_cell[&(ib, f.clone())], &w).clone();
                if lhs != *cod.vid(&on_one[f]) {
                    r.push("lax-unit", vec![f.clone()], "left unit coherence fails");
                }
            }
            CellDirection::Colax => {
                let w = cod.whisker_l(&on_one[f], &unit_cell[a]);
                let lhs = cod.vcomp(&w, &comp_cell[&(f.clone(), ia)]).clone();
                if lhs != *cod.vid(&on_one[f]) {
                    r.push("lax-unit", vec![f.clone()], "right unit coherence fails");
                }
                let w = cod.whisker_r(&unit_cell[b], &on_one[f]);
                let lhs = cod.vcomp(&w, &comp_cell[&(ib, f.clone())]).clone();
                if lhs != *cod.vid(&on_one[f]) {
                    r.push("lax-unit", vec![f.clone()], "left unit coherence fails");
                }
            }
        }
    }
    r
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TransKind {
    Lax,
    Op,
    Strict,
}

/// A transformation between lax 2-functors, in the shapes the source material
/// uses: lax transformations, optransformations, and strict transformations.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Transformation {
    pub kind: TransKind,
    pub dom: LaxTwoFunctor,
    pub cod: LaxTwoFunctor,
    /// per object a: a 1-cell u(a) -> v(a)
    pub at_obj: BTreeMap<Name, Name>,
    /// per 1-cell f: the structural 2-cell
    pub at_one: BTreeMap<Name, Name>,
}

impl Transformation {
    pub fn new(
        kind: TransKind,
        dom: LaxTwoFunctor,
        cod: LaxTwoFunctor,
        at_obj: BTreeMap<Name, Name>,
        at_one: BTreeMap<Name, Name>,
    ) -> Result<Transformation> {
        let t = Transformation {
            kind,
            dom,
            cod,
            at_obj,
            at_one,
        };
        let r = t.check_coherence();
        if r.is_empty() {
            Ok(t)
        } else {
            Err(Error::Invalid(r))
        }
    }

    pub fn relative_to_objects(&self) -> bool {
        self.dom.dom.objects().iter().all(|a| {
            let b = &self.dom.cod;
            self.at_obj.get(a) == Some(b.unit1(&self.dom.on_obj[a]))
        })
    }

    pub fn is_strict_components(&self) -> bool {
        self.at_one
            .values()
            .all(|c| self.dom.cod.is_identity_two(c))
    }

    pub fn check_coherence(&self) -> ValidationReport {
        match self.kind {
            TransKind::Lax => self.check_lax(),
            TransKind::Strict => {
                let mut r = self.check_lax();
                for (f, c) in &self.at_one {
                    if !self.dom.cod.is_identity_two(c) {
                        r.push(
                            "strict-transformation",
                            vec![f.clone()],
                            "component 2-cell is not an identity",
                        );
                    }
                }
                r
            }
            TransKind::Op => {
                // an optransformation u -> v is a lax transformation v^op -> u^op
                let t = Transformation {
                    kind: TransKind::Lax,
                    dom: self.cod.op_dual(),
                    cod: self.dom.op_dual(),
                    at_obj: self.at_obj.clone(),
                    at_one: self.at_one.clone(),
                };
                t.check_lax()
            }
        }
    }

    fn check_lax(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let a_cat = &self.dom.dom;
        let b_cat = &self.dom.cod;
        if *self.cod.dom != **a_cat || *self.cod.cod != **b_cat {
            r.push("transformation", vec![], "functor boundaries differ");
            return r;
        }
        let u = &self.dom;
        let v = &self.cod;
        for a in a_cat.objects() {
            match self.at_obj.get(a) {
                None => r.push("total", vec![a.clone()], "missing object component"),
                Some(s) => {
                    if !b_cat.has_one(s) {
                        r.push("transformation", vec![a.clone()], "component not a 1-cell");
                        continue;
                    }
                    let (sa, sb) = b_cat.ends1(s);
                    if sa != &u.on_obj[a] || sb != &v.on_obj[a] {
                        r.push(
                            "transformation",
                            vec![a.clone(), s.clone()],
                            "component endpoints wrong",
                        );
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // sigma_f : sigma_{a'} * u(f) => v(f) * sigma_a
        for (f, (a, ap)) in a_cat.one_cells() {
            match self.at_one.get(f) {
                None => r.push("total", vec![f.clone()], "missing 1-cell component"),
                Some(c) => {
                    if !b_cat.has_two(c) {
                        r.push("transformation", vec![f.clone()], "component not a 2-cell");
                        continue;
                    }
                    let src = b_cat
                        .hcomp1(&self.at_obj[ap], &u.on_one[f])
                        .clone();
                    let tgt = b_cat.hcomp1(&v.on_one[f], &self.at_obj[a]).clone();
                    if *b_cat.vsrc(c) != src || *b_cat.vtgt(c) != tgt {
                        r.push(
                            "transformation",
                            vec![f.clone(), c.clone()],
                            "component boundary wrong",
                        );
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // naturality in 2-cells: (v(t) * sigma_a) . sigma_f = sigma_g . (sigma_{a'} * u(t))
        for (t, (a, ap)) in a_cat.two_cells() {
            let f = a_cat.vsrc(t).clone();
            let g = a_cat.vtgt(t).clone();
            let lhs = b_cat
                .vcomp(
                    &b_cat.hcomp2(&v.on_two[t], b_cat.vid(&self.at_obj[a])).clone(),
                    &self.at_one[&f],
                )
                .clone();
            let rhs = b_cat
                .vcomp(
                    &self.at_one[&g],
                    &b_cat
                        .hcomp2(b_cat.vid(&self.at_obj[ap]), &u.on_two[t])
                        .clone(),
                )
                .clone();
            if lhs != rhs {
                r.push("transformation-naturality", vec![t.clone()], "naturality fails");
            }
        }
        // composition coherence
        for (fp, f) in composable_pairs(a_cat) {
            let (a, _) = a_cat.ends1(&f);
            let (_, app) = a_cat.ends1(&fp);
            let fpf = a_cat.hcomp1(&fp, &f).clone();
            let lhs = b_cat
                .vcomp(
                    &self.at_one[&fpf],
                    &b_cat.whisker_l(&self.at_obj[app], &u.comp_cell[&(fp.clone(), f.clone())]),
                )
                .clone();
            let step1 = b_cat.whisker_r(&self.at_one[&fp], &u.on_one[&f]);
            let step2 = b_cat.whisker_l(&v.on_one[&fp], &self.at_one[&f]);
            let step3 = b_cat.whisker_r(&v.comp_cell[&(fp.clone(), f.clone())], &self.at_obj[a]);
            let rhs = b_cat
                .vcomp(&step3, &b_cat.vcomp(&step2, &step1).clone())
                .clone();
            if lhs != rhs {
                r.push(
                    "transformation-composition",
                    vec![fp.clone(), f.clone()],
                    "composition coherence fails",
                );
            }
        }
        // unit coherence
        for a in a_cat.objects() {
            let ia = a_cat.unit1(a).clone();
            let lhs = b_cat
                .vcomp(
                    &self.at_one[&ia],
                    &b_cat.whisker_r(&u.unit_cell[a], &self.at_obj[a]),
                )
                .clone();
            // careful: sigma_a * u_a whiskers on the right of sigma_a
            let lhs_fixed = {
                // sigma_{1_a} . (sigma_a * u_a)
                let w = b_cat.whisker_l(&self.at_obj[a], &u.unit_cell[a]);
                b_cat.vcomp(&self.at_one[&ia], &w).clone()
            };
            let _ = lhs;
            let rhs = b_cat.whisker_r(&v.unit_cell[a], &self.at_obj[a]);
            if lhs_fixed != rhs {
                r.push("transformation-unit", vec![a.clone()], "unit coherence fails");
            }
        }
        r
    }
}

/// True iff the candidate is a strict 2-functor bijective on all three levels.
pub fn iso_check(f: &StrictTwoFunctor) -> Result<bool> {
    for o in f.dom.objects() {
        if !f.on_obj.contains_key(o) {
            return Err(Error::NotTotal {
                kind: "object",
                name: o.to_string(),
            });
        }
    }
    for (c, _) in f.dom.one_cells() {
        if !f.on_one.contains_key(c) {
            return Err(Error::NotTotal {
                kind: "1-cell",
                name: c.to_string(),
            });
        }
    }
    for (c, _) in f.dom.two_cells() {
        if !f.on_two.contains_key(c) {
            return Err(Error::NotTotal {
                kind: "2-cell",
                name: c.to_string(),
            });
        }
    }
    Ok(f.validate().is_empty() && f.is_bijective())
}

/// Every strict 2-functor `a -> b` in canonical order, stopping at `budget`
/// emitted functors. The boolean is the truncation flag.
pub fn enumerate_strict(
    a: &Arc<TwoCat>,
    b: &Arc<TwoCat>,
    budget: usize,
) -> (Vec<StrictTwoFunctor>, bool) {
    let mut out = Vec::new();
    let mut truncated = false;
    let objs: Vec<Name> = a.objects().to_vec();
    let mut on_obj: BTreeMap<Name, Name> = BTreeMap::new();
    assign_objects(a, b, &objs, 0, &mut on_obj, &mut out, budget, &mut truncated);
    (out, truncated)
}

#[allow(clippy::too_many_arguments)]
fn assign_objects(
    a: &Arc<TwoCat>,
    b: &Arc<TwoCat>,
    objs: &[Name],
    i: usize,
    on_obj: &mut BTreeMap<Name, Name>,
    out: &mut Vec<StrictTwoFunctor>,
    budget: usize,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if i == objs.len() {
        let ones: Vec<Name> = a.one_cells().map(|(f, _)| f.clone()).collect();
        let mut on_one = BTreeMap::new();
        assign_ones(a, b, on_obj, &ones, 0, &mut on_one, out, budget, truncated);
        return;
    }
    for cand in b.objects() {
        on_obj.insert(objs[i].clone(), cand.clone());
        assign_objects(a, b, objs, i + 1, on_obj, out, budget, truncated);
        on_obj.remove(&objs[i]);
        if *truncated {
            return;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign_ones(
    a: &Arc<TwoCat>,
    b: &Arc<TwoCat>,
    on_obj: &BTreeMap<Name, Name>,
    ones: &[Name],
    i: usize,
    on_one: &mut BTreeMap<Name, Name>,
    out: &mut Vec<StrictTwoFunctor>,
    budget: usize,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if i == ones.len() {
        let twos: Vec<Name> = a.two_cells().map(|(t, _)| t.clone()).collect();
        let mut on_two = BTreeMap::new();
        assign_twos(a, b, on_obj, on_one, &twos, 0, &mut on_two, out, budget, truncated);
        return;
    }
    let f = &ones[i];
    let (fa, fb) = a.ends1(f);
    let is_unit = a.unit1(fa) == f && fa == fb;
    let candidates: Vec<Name> = if is_unit {
        vec![b.unit1(&on_obj[fa]).clone()]
    } else {
        b.hom(&on_obj[fa], &on_obj[fb])
            .objects()
            .to_vec()
    };
    'cand: for cand in candidates {
        on_one.insert(f.clone(), cand);
        // prune: every composable pair fully assigned must be preserved
        for (g, (gb, _)) in a.one_cells() {
            for (h, (_, hb)) in a.one_cells() {
                if hb != gb {
                    continue;
                }
                let (Some(ig), Some(ih)) = (on_one.get(g), on_one.get(h)) else {
                    continue;
                };
                let comp = a.hcomp1(g, h);
                if let Some(icomp) = on_one.get(comp) {
                    if b.hcomp1(ig, ih) != icomp {
                        on_one.remove(f);
                        continue 'cand;
                    }
                }
            }
        }
        assign_ones(a, b, on_obj, ones, i + 1, on_one, out, budget, truncated);
        on_one.remove(f);
        if *truncated {
            return;
        }
    }
}

#[allow(clippy::too_many_arguments)]
fn assign_twos(
    a: &Arc<TwoCat>,
    b: &Arc<TwoCat>,
    on_obj: &BTreeMap<Name, Name>,
    on_one: &BTreeMap<Name, Name>,
    twos: &[Name],
    i: usize,
    on_two: &mut BTreeMap<Name, Name>,
    out: &mut Vec<StrictTwoFunctor>,
    budget: usize,
    truncated: &mut bool,
) {
    if *truncated {
        return;
    }
    if i == twos.len() {
        let cand = StrictTwoFunctor {
            dom: a.clone(),
            cod: b.clone(),
            on_obj: on_obj.clone(),
            on_one: on_one.clone(),
            on_two: on_two.clone(),
        };
        if cand.validate().is_empty() {
            if out.len() >= budget {
                *truncated = true;
                return;
            }
            out.push(cand);
        }
        return;
    }
    let t = &twos[i];
    let (ta, tb) = a.ends2(t);
    let src = &on_one[a.vsrc(t)];
    let tgt = &on_one[a.vtgt(t)];
    let is_vid = a.is_identity_two(t);
    let hom = b.hom(&on_obj[ta], &on_obj[tb]);
    let candidates: Vec<Name> = if is_vid {
        vec![hom.id(src).clone()]
    } else {
        hom.arrows()
            .iter()
            .filter(|ar| ar.src == *src && ar.tgt == *tgt)
            .map(|ar| ar.name.clone())
            .collect()
    };
    for cand in candidates {
        on_two.insert(t.clone(), cand);
        assign_twos(a, b, on_obj, on_one, twos, i + 1, on_two, out, budget, truncated);
        on_two.remove(t);
        if *truncated {
            return;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;
    use crate::twocat::{from_cat, terminal};

    fn arc(t: TwoCat) -> Arc<TwoCat> {
        Arc::new(t)
    }

    #[test]
    fn identity_is_strict_and_lax_coherent() {
        let t = arc(from_cat(&ordinal(2)));
        let id = StrictTwoFunctor::identity(t);
        assert!(id.validate().is_empty());
        assert!(id.as_lax().check_coherence().is_empty());
        assert!(id.as_lax().is_normalized());
        assert!(id.as_colax().check_coherence().is_empty());
    }

    #[test]
    fn enumerate_point_into() {
        let e = arc(terminal());
        let t = arc(from_cat(&ordinal(2)));
        let (fs, trunc) = enumerate_strict(&e, &t, 100);
        assert!(!trunc);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn enumerate_arrow_endos() {
        let t = arc(from_cat(&ordinal(1)));
        let (fs, trunc) = enumerate_strict(&t, &t, 100);
        assert!(!trunc);
        assert_eq!(fs.len(), 3); // monotone maps [1] -> [1]
    }

    #[test]
    fn enumerate_into_terminal() {
        let t = arc(from_cat(&ordinal(2)));
        let e = arc(terminal());
        let (fs, _) = enumerate_strict(&t, &e, 100);
        assert_eq!(fs.len(), 1);
    }

    #[test]
    fn budget_truncates_with_flag() {
        let e = arc(terminal());
        let t = arc(from_cat(&ordinal(2)));
        let (fs, trunc) = enumerate_strict(&e, &t, 2);
        assert!(trunc);
        assert_eq!(fs.len(), 2);
    }

    #[test]
    fn compose_strict_is_strict() {
        let t = arc(from_cat(&ordinal(1)));
        let id = StrictTwoFunctor::identity(t.clone());
        let c = id.compose(&id).unwrap();
        assert_eq!(c, id);
        let lax = id.as_lax().compose(&id.as_lax()).unwrap();
        assert!(lax.is_strict());
    }

    #[test]
    fn iso_check_identity_and_collapse() {
        let t = arc(from_cat(&ordinal(1)));
        let id = StrictTwoFunctor::identity(t.clone());
        assert!(iso_check(&id).unwrap());
        let e = arc(terminal());
        let (fs, _) = enumerate_strict(&t, &e, 10);
        assert!(!iso_check(&fs[0]).unwrap());
    }

    #[test]
    fn identity_transformation_coherent() {
        let t = arc(from_cat(&ordinal(1)));
        let id = StrictTwoFunctor::identity(t.clone()).as_lax();
        let at_obj: BTreeMap<Name, Name> = t
            .objects()
            .iter()
            .map(|a| (a.clone(), t.unit1(a).clone()))
            .collect();
        let at_one: BTreeMap<Name, Name> = t
            .one_cells()
            .map(|(f, _)| {
                let lhs = t.hcomp1(t.unit1(&t.ends1(f).1.clone()), f).clone();
                (f.clone(), t.vid(&lhs).clone())
            })
            .collect();
        let tr = Transformation::new(TransKind::Strict, id.clone(), id, at_obj, at_one).unwrap();
        assert!(tr.relative_to_objects());
    }
}
