//! Nerves of finite strict 2-categories: enumeration of (normalized) lax
//! functors from ordinals, the simplicial sets and Cat-valued simplicial
//! objects they assemble into, truncated element categories, and the four
//! Sup comparison morphisms with their coherence data.
//!
//! The dimension bound `d` is an explicit argument everywhere. Full lax
//! enumeration (non-normalized unit data) is budget-guarded with an explicit
//! error on overflow, never a silent truncation.

use std::collections::BTreeMap;
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cat::{delta_leq, CatFunctor, FinCat, Monotone, Presheaf};
use crate::error::{Error, Result};
use crate::functor::{LaxTwoFunctor, StrictTwoFunctor};
use crate::groth::cat_of_elements;
use crate::name::Name;
use crate::twocat::{from_cat, TwoCat};
use crate::validate::ValidationReport;

/// A lax 2-functor `[m] -> A` by explicit tables: objects `x_i`, 1-cells
/// `x_{j,i}`, composition cells `x_{k,j,i}`, unit cells `(x)_i`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct SimplexData {
    pub level: usize,
    pub objs: Vec<Name>,
    pub ones: BTreeMap<(usize, usize), Name>,
    pub comps: BTreeMap<(usize, usize, usize), Name>,
    pub units: Vec<Name>,
}

impl SimplexData {
    pub fn name(&self) -> Name {
        let mut parts = vec![Name::num(self.level as i64)];
        parts.extend(self.objs.iter().cloned());
        for (_, v) in &self.ones {
            parts.push(v.clone());
        }
        for (_, v) in &self.comps {
            parts.push(v.clone());
        }
        parts.extend(self.units.iter().cloned());
        Name::node("sx", parts)
    }

    pub fn check(&self, a: &TwoCat) -> ValidationReport {
        let mut r = ValidationReport::new();
        let m = self.level;
        for i in 0..=m {
            for j in i..=m {
                let Some(f) = self.ones.get(&(j, i)) else {
                    r.push("simplex", vec![], format!("missing 1-cell ({j},{i})"));
                    continue;
                };
                if !a.has_one(f) || *a.ends1(f) != (self.objs[i].clone(), self.objs[j].clone()) {
                    r.push("simplex", vec![f.clone()], "1-cell endpoints wrong");
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        for i in 0..=m {
            let u = &self.units[i];
            if !a.has_two(u)
                || a.vsrc(u) != a.unit1(&self.objs[i])
                || a.vtgt(u) != &self.ones[&(i, i)]
            {
                r.push("simplex", vec![u.clone()], format!("unit cell ({i}) wrong"));
            }
        }
        for i in 0..=m {
            for j in i..=m {
                for k in j..=m {
                    let Some(c) = self.comps.get(&(k, j, i)) else {
                        r.push("simplex", vec![], format!("missing comp cell ({k},{j},{i})"));
                        continue;
                    };
                    let src = a.hcomp1(&self.ones[&(k, j)], &self.ones[&(j, i)]).clone();
                    if !a.has_two(c) || *a.vsrc(c) != src || a.vtgt(c) != &self.ones[&(k, i)] {
                        r.push("simplex", vec![c.clone()], format!("comp cell ({k},{j},{i}) wrong"));
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // unit coherence
        for i in 0..=m {
            for j in i..=m {
                let f = &self.ones[&(j, i)];
                let right = a
                    .vcomp(
                        &self.comps[&(j, i, i)],
                        &a.whisker_l(f, &self.units[i]),
                    )
                    .clone();
                if right != *a.vid(f) {
                    r.push("simplex-unit", vec![f.clone()], format!("right unit fails at ({j},{i})"));
                }
                let left = a
                    .vcomp(
                        &self.comps[&(j, j, i)],
                        &a.whisker_r(&self.units[j], f),
                    )
                    .clone();
                if left != *a.vid(f) {
                    r.push("simplex-unit", vec![f.clone()], format!("left unit fails at ({j},{i})"));
                }
            }
        }
        // associativity coherence
        for i in 0..=m {
            for j in i..=m {
                for k in j..=m {
                    for l in k..=m {
                        let lhs = a
                            .vcomp(
                                &self.comps[&(l, k, i)],
                                &a.whisker_l(&self.ones[&(l, k)], &self.comps[&(k, j, i)]),
                            )
                            .clone();
                        let rhs = a
                            .vcomp(
                                &self.comps[&(l, j, i)],
                                &a.whisker_r(&self.comps[&(l, k, j)], &self.ones[&(j, i)]),
                            )
                            .clone();
                        if lhs != rhs {
                            r.push(
                                "simplex-assoc",
                                vec![],
                                format!("associativity fails at ({l},{k},{j},{i})"),
                            );
                        }
                    }
                }
            }
        }
        r
    }

    pub fn is_normalized(&self, a: &TwoCat) -> bool {
        let m = self.level;
        for i in 0..=m {
            if !a.is_identity_two(&self.units[i]) {
                return false;
            }
        }
        for ((k, j, i), c) in &self.comps {
            if (k == j || j == i) && !a.is_identity_two(c) {
                return false;
            }
        }
        true
    }

    /// Pre-composition with a monotone map.
    pub fn restrict(&self, phi: &Monotone) -> SimplexData {
        assert_eq!(phi.cod, self.level);
        let m = phi.dom;
        let objs = (0..=m).map(|i| self.objs[phi.apply(i)].clone()).collect();
        let mut ones = BTreeMap::new();
        let mut comps = BTreeMap::new();
        for i in 0..=m {
            for j in i..=m {
                ones.insert((j, i), self.ones[&(phi.apply(j), phi.apply(i))].clone());
                for k in j..=m {
                    comps.insert(
                        (k, j, i),
                        self.comps[&(phi.apply(k), phi.apply(j), phi.apply(i))].clone(),
                    );
                }
            }
        }
        let units = (0..=m).map(|i| self.units[phi.apply(i)].clone()).collect();
        SimplexData {
            level: m,
            objs,
            ones,
            comps,
            units,
        }
    }
}

/// All (normalized) lax functors `[m] -> a`, canonical order; errors if the
/// output would exceed `budget`.
pub fn enumerate_lax(
    m: usize,
    a: &TwoCat,
    normalized: bool,
    budget: usize,
) -> Result<Vec<SimplexData>> {
    let mut out = Vec::new();
    let objs_choices: Vec<Vec<Name>> = {
        let mut acc: Vec<Vec<Name>> = vec![vec![]];
        for _ in 0..=m {
            let mut next = Vec::new();
            for partial in &acc {
                for o in a.objects() {
                    let mut p = partial.clone();
                    p.push(o.clone());
                    next.push(p);
                }
            }
            acc = next;
        }
        acc
    };
    for objs in objs_choices {
        enumerate_with_objs(m, a, normalized, budget, &objs, &mut out)?;
    }
    out.sort();
    Ok(out)
}

fn enumerate_with_objs(
    m: usize,
    a: &TwoCat,
    normalized: bool,
    budget: usize,
    objs: &[Name],
    out: &mut Vec<SimplexData>,
) -> Result<()> {
    // choose the 1-cells x_{j,i}
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    for i in 0..=m {
        for j in i..=m {
            pairs.push((j, i));
        }
    }
    let mut ones: BTreeMap<(usize, usize), Name> = BTreeMap::new();
    fn rec_ones(
        pairs: &[(usize, usize)],
        idx: usize,
        m: usize,
        a: &TwoCat,
        normalized: bool,
        budget: usize,
        objs: &[Name],
        ones: &mut BTreeMap<(usize, usize), Name>,
        out: &mut Vec<SimplexData>,
    ) -> Result<()> {
        if idx == pairs.len() {
            return rec_cells(m, a, normalized, budget, objs, ones, out);
        }
        let (j, i) = pairs[idx];
        let candidates: Vec<Name> = if i == j && normalized {
            vec![a.unit1(&objs[i]).clone()]
        } else {
            a.hom(&objs[i], &objs[j]).objects().to_vec()
        };
        for c in candidates {
            ones.insert((j, i), c);
            rec_ones(pairs, idx + 1, m, a, normalized, budget, objs, ones, out)?;
        }
        ones.remove(&pairs[idx]);
        Ok(())
    }
    rec_ones(pairs.as_slice(), 0, m, a, normalized, budget, objs, &mut ones, out)
}

#[allow(clippy::too_many_arguments)]
fn rec_cells(
    m: usize,
    a: &TwoCat,
    normalized: bool,
    budget: usize,
    objs: &[Name],
    ones: &BTreeMap<(usize, usize), Name>,
    out: &mut Vec<SimplexData>,
) -> Result<()> {
    // unit cells
    let mut unit_choices: Vec<Vec<Name>> = Vec::new();
    for i in 0..=m {
        if normalized {
            unit_choices.push(vec![a.vid(a.unit1(&objs[i])).clone()]);
        } else {
            let hom = a.hom(&objs[i], &objs[i]);
            let want_src = a.unit1(&objs[i]).clone();
            let want_tgt = ones[&(i, i)].clone();
            unit_choices.push(
                hom.arrows()
                    .iter()
                    .filter(|t| t.src == want_src && t.tgt == want_tgt)
                    .map(|t| t.name.clone())
                    .collect(),
            );
        }
    }
    // composition cells
    let mut triples: Vec<(usize, usize, usize)> = Vec::new();
    for i in 0..=m {
        for j in i..=m {
            for k in j..=m {
                triples.push((k, j, i));
            }
        }
    }
    let mut comp_choices: Vec<Vec<Name>> = Vec::new();
    for &(k, j, i) in &triples {
        let src = a.hcomp1(&ones[&(k, j)], &ones[&(j, i)]).clone();
        let tgt = ones[&(k, i)].clone();
        let degenerate = k == j || j == i;
        let hom = a.hom(&objs[i], &objs[k]);
        let cands: Vec<Name> = hom
            .arrows()
            .iter()
            .filter(|t| t.src == src && t.tgt == tgt)
            .filter(|t| {
                if normalized && degenerate {
                    a.is_identity_two(&t.name)
                } else {
                    true
                }
            })
            .map(|t| t.name.clone())
            .collect();
        comp_choices.push(cands);
    }
    // cartesian DFS over units then comps, with a final coherence check
    let mut units = vec![Name::atom("?"); m + 1];
    fn rec_units(
        i: usize,
        m: usize,
        a: &TwoCat,
        budget: usize,
        objs: &[Name],
        ones: &BTreeMap<(usize, usize), Name>,
        unit_choices: &[Vec<Name>],
        comp_choices: &[Vec<Name>],
        triples: &[(usize, usize, usize)],
        units: &mut Vec<Name>,
        out: &mut Vec<SimplexData>,
    ) -> Result<()> {
        if i > m {
            let mut comps = BTreeMap::new();
            return rec_comps(
                0, m, a, budget, objs, ones, comp_choices, triples, units, &mut comps, out,
            );
        }
        for c in &unit_choices[i] {
            units[i] = c.clone();
            rec_units(
                i + 1,
                m,
                a,
                budget,
                objs,
                ones,
                unit_choices,
                comp_choices,
                triples,
                units,
                out,
            )?;
        }
        Ok(())
    }
    #[allow(clippy::too_many_arguments)]
    fn rec_comps(
        idx: usize,
        m: usize,
        a: &TwoCat,
        budget: usize,
        objs: &[Name],
        ones: &BTreeMap<(usize, usize), Name>,
        comp_choices: &[Vec<Name>],
        triples: &[(usize, usize, usize)],
        units: &[Name],
        comps: &mut BTreeMap<(usize, usize, usize), Name>,
        out: &mut Vec<SimplexData>,
    ) -> Result<()> {
        if idx == triples.len() {
            let sx = SimplexData {
                level: m,
                objs: objs.to_vec(),
                ones: ones.clone(),
                comps: comps.clone(),
                units: units.to_vec(),
            };
            if sx.check(a).is_empty() {
                if out.len() >= budget {
                    return Err(Error::Budget {
                        what: "lax simplices",
                        budget,
                    });
                }
                out.push(sx);
            }
            return Ok(());
        }
        for c in &comp_choices[idx] {
            comps.insert(triples[idx], c.clone());
            rec_comps(
                idx + 1,
                m,
                a,
                budget,
                objs,
                ones,
                comp_choices,
                triples,
                units,
                comps,
                out,
            )?;
        }
        comps.remove(&triples[idx]);
        Ok(())
    }
    rec_units(
        0,
        m,
        a,
        budget,
        objs,
        ones,
        &unit_choices,
        &comp_choices,
        &triples,
        &mut units,
        out,
    )
}

/// A dimension-bounded simplicial set with explicit face/degeneracy tables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SimplicialSet {
    pub dim: usize,
    pub levels: Vec<Vec<Name>>,
    /// faces[m] maps (simplex at level m, i) to its i-th face at level m-1
    pub faces: Vec<BTreeMap<(Name, usize), Name>>,
    /// degens[m] maps (simplex at level m, i) to level m+1 (when m+1 <= dim)
    pub degens: Vec<BTreeMap<(Name, usize), Name>>,
}

impl SimplicialSet {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        if self.levels.len() != self.dim + 1 {
            r.push("sset", vec![], "level count differs from dim+1");
            return r;
        }
        for m in 1..=self.dim {
            for x in &self.levels[m] {
                for i in 0..=m {
                    match self.faces[m].get(&(x.clone(), i)) {
                        None => r.push("sset", vec![x.clone()], format!("missing face {i}")),
                        Some(y) => {
                            if !self.levels[m - 1].contains(y) {
                                r.push("sset", vec![x.clone()], "face not in level below");
                            }
                        }
                    }
                }
            }
        }
        for m in 0..self.dim {
            for x in &self.levels[m] {
                for i in 0..=m {
                    match self.degens[m].get(&(x.clone(), i)) {
                        None => r.push("sset", vec![x.clone()], format!("missing degeneracy {i}")),
                        Some(y) => {
                            if !self.levels[m + 1].contains(y) {
                                r.push("sset", vec![x.clone()], "degeneracy not in level above");
                            }
                        }
                    }
                }
            }
        }
        if !r.is_empty() {
            return r;
        }
        // simplicial identities on the stored range
        for m in 2..=self.dim {
            for x in &self.levels[m] {
                for j in 1..=m {
                    for i in 0..j {
                        let lhs = self.faces[m - 1]
                            [&(self.faces[m][&(x.clone(), j)].clone(), i)]
                            .clone();
                        let rhs = self.faces[m - 1]
                            [&(self.faces[m][&(x.clone(), i)].clone(), j - 1)]
                            .clone();
                        if lhs != rhs {
                            r.push("sset-id", vec![x.clone()], format!("d{i} d{j} fails"));
                        }
                    }
                }
            }
        }
        for m in 0..self.dim.saturating_sub(1) {
            for x in &self.levels[m] {
                for j in 0..=m {
                    for i in 0..=j {
                        let lhs = self.degens[m + 1]
                            [&(self.degens[m][&(x.clone(), j)].clone(), i)]
                            .clone();
                        let rhs = self.degens[m + 1]
                            [&(self.degens[m][&(x.clone(), i)].clone(), j + 1)]
                            .clone();
                        if lhs != rhs {
                            r.push("sset-id", vec![x.clone()], format!("s{i} s{j} fails"));
                        }
                    }
                }
            }
        }
        for m in 1..=self.dim.saturating_sub(1) {
            for x in &self.levels[m] {
                for j in 0..=m {
                    let sx = self.degens[m][&(x.clone(), j)].clone();
                    for i in 0..=m + 1 {
                        let lhs = self.faces[m + 1][&(sx.clone(), i)].clone();
                        let rhs = if i < j {
                            self.degens[m - 1][&(self.faces[m][&(x.clone(), i)].clone(), j - 1)]
                                .clone()
                        } else if i == j || i == j + 1 {
                            x.clone()
                        } else {
                            self.degens[m - 1][&(self.faces[m][&(x.clone(), i - 1)].clone(), j)]
                                .clone()
                        };
                        if lhs != rhs {
                            r.push("sset-id", vec![x.clone()], format!("d{i} s{j} fails"));
                        }
                    }
                }
            }
        }
        r
    }

    /// The action of an arbitrary monotone map, from the elementary tables.
    pub fn act(&self, phi: &Monotone, x: &Name) -> Name {
        // epi-mono factorization: degeneracies first (top-down), then faces
        let mut cur = x.clone();
        let mut level = phi.cod;
        // remove the indices not in the image, from the top
        for i in (0..=phi.cod).rev() {
            if !phi.values.contains(&i) {
                cur = self.faces[level][&(cur, i)].clone();
                level -= 1;
            }
        }
        // now duplicate where phi repeats
        for i in (0..phi.dom).rev() {
            if phi.values[i] == phi.values[i + 1] {
                // s_j where j = number of distinct values strictly before position i+1
                let j = phi.values[..=i]
                    .iter()
                    .collect::<std::collections::BTreeSet<_>>()
                    .len()
                    - 1;
                cur = self.degens[level][&(cur, j)].clone();
                level += 1;
            }
        }
        assert_eq!(level, phi.dom);
        cur
    }

    pub fn is_degenerate(&self, m: usize, x: &Name) -> bool {
        if m == 0 {
            return false;
        }
        for i in 0..m {
            for y in &self.levels[m - 1] {
                if self.degens[m - 1][&(y.clone(), i)] == *x {
                    return true;
                }
            }
        }
        false
    }

    pub fn nondegenerate(&self, m: usize) -> Vec<Name> {
        self.levels[m]
            .iter()
            .filter(|x| !self.is_degenerate(m, x))
            .cloned()
            .collect()
    }

    /// The presheaf on the truncated simplex category.
    pub fn as_presheaf(&self) -> Presheaf {
        let base = Arc::new(delta_leq(self.dim));
        let at: BTreeMap<Name, Vec<Name>> = (0..=self.dim)
            .map(|m| (Name::num(m as i64), self.levels[m].clone()))
            .collect();
        let mut act = BTreeMap::new();
        for ar in base.arrows() {
            let mono = mono_of_name(&ar.name);
            let mut table = BTreeMap::new();
            for x in &self.levels[mono.cod] {
                table.insert(x.clone(), self.act(&mono, x));
            }
            act.insert(ar.name.clone(), table);
        }
        Presheaf {
            base,
            at,
            act,
        }
    }

    pub fn to_json(&self) -> SimplicialSetJson {
        SimplicialSetJson {
            dim: self.dim,
            levels: self
                .levels
                .iter()
                .map(|l| l.iter().map(|n| n.to_string()).collect())
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|((x, i), y)| (format!("{x}|{i}"), y.to_string()))
                        .collect()
                })
                .collect(),
            degeneracies: self
                .degens
                .iter()
                .map(|f| {
                    f.iter()
                        .map(|((x, i), y)| (format!("{x}|{i}"), y.to_string()))
                        .collect()
                })
                .collect(),
        }
    }
}

/// Stable JSON schema shared with external tools.
#[derive(Serialize, Deserialize)]
pub struct SimplicialSetJson {
    pub dim: usize,
    pub levels: Vec<Vec<String>>,
    pub faces: Vec<BTreeMap<String, String>>,
    pub degeneracies: Vec<BTreeMap<String, String>>,
}

pub fn mono_of_name(n: &Name) -> Monotone {
    match n {
        Name::Node("mono", p) => {
            let dom = match p[0] {
                Name::Num(v) => v as usize,
                _ => panic!(),
            };
            let cod = match p[1] {
                Name::Num(v) => v as usize,
                _ => panic!(),
            };
            let values = p[2..]
                .iter()
                .map(|v| match v {
                    Name::Num(x) => *x as usize,
                    _ => panic!(),
                })
                .collect();
            Monotone::new(dom, cod, values)
        }
        _ => panic!("not a monotone-map name: {n}"),
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NerveKind {
    Lax,
    LaxNor,
}

/// The (normalized) lax nerve as a bounded simplicial set, with simplices
/// named by their full tables.
pub fn nerf(a: &TwoCat, kind: NerveKind, d: usize, budget: usize) -> Result<SimplicialSet> {
    let mut datas: Vec<Vec<SimplexData>> = Vec::new();
    for m in 0..=d {
        datas.push(enumerate_lax(
            m,
            a,
            matches!(kind, NerveKind::LaxNor),
            budget,
        )?);
    }
    let levels: Vec<Vec<Name>> = datas
        .iter()
        .map(|l| l.iter().map(|x| x.name()).collect())
        .collect();
    let by_name: Vec<BTreeMap<Name, &SimplexData>> = datas
        .iter()
        .map(|l| l.iter().map(|x| (x.name(), x)).collect())
        .collect();
    let mut faces: Vec<BTreeMap<(Name, usize), Name>> = vec![BTreeMap::new(); d + 1];
    let mut degens: Vec<BTreeMap<(Name, usize), Name>> = vec![BTreeMap::new(); d + 1];
    for m in 1..=d {
        for (nm, x) in &by_name[m] {
            for i in 0..=m {
                let phi = Monotone::coface(m, i);
                faces[m].insert((nm.clone(), i), x.restrict(&phi).name());
            }
        }
    }
    for m in 0..d {
        for (nm, x) in &by_name[m] {
            for i in 0..=m {
                let phi = Monotone::codegeneracy(m, i);
                degens[m].insert((nm.clone(), i), x.restrict(&phi).name());
            }
        }
    }
    let s = SimplicialSet {
        dim: d,
        levels,
        faces,
        degens,
    };
    let r = s.validate();
    if r.is_empty() {
        Ok(s)
    } else {
        Err(Error::Invalid(r))
    }
}

/// The classical nerve of a finite category, as composable chains.
pub fn nerve_of_cat(c: &FinCat, d: usize) -> SimplicialSet {
    let mut levels: Vec<Vec<Name>> = Vec::new();
    let mut chains: Vec<Vec<Vec<Name>>> = Vec::new(); // per level: [x0, f1, ..., fm]
    let lvl0: Vec<Vec<Name>> = c.objects().iter().map(|o| vec![o.clone()]).collect();
    chains.push(lvl0);
    for m in 1..=d {
        let mut lvl = Vec::new();
        for ch in &chains[m - 1] {
            let last_obj = chain_end(c, ch);
            for f in c.arrows() {
                if f.src == last_obj {
                    let mut nc = ch.clone();
                    nc.push(f.name.clone());
                    lvl.push(nc);
                }
            }
        }
        chains.push(lvl);
    }
    for lvl in &chains {
        levels.push(lvl.iter().map(|ch| Name::node("ch", ch.clone())).collect());
    }
    let mut faces: Vec<BTreeMap<(Name, usize), Name>> = vec![BTreeMap::new(); d + 1];
    let mut degens: Vec<BTreeMap<(Name, usize), Name>> = vec![BTreeMap::new(); d + 1];
    for m in 1..=d {
        for ch in &chains[m] {
            let nm = Name::node("ch", ch.clone());
            for i in 0..=m {
                let f = chain_face(c, ch, i);
                faces[m].insert((nm.clone(), i), Name::node("ch", f));
            }
        }
    }
    for m in 0..d {
        for ch in &chains[m] {
            let nm = Name::node("ch", ch.clone());
            for i in 0..=m {
                let mut nc = ch.clone();
                let obj_i = chain_obj(c, ch, i);
                nc.insert(i + 1, c.id(&obj_i).clone());
                degens[m].insert((nm.clone(), i), Name::node("ch", nc));
            }
        }
    }
    SimplicialSet {
        dim: d,
        levels,
        faces,
        degens,
    }
}

fn chain_end(c: &FinCat, ch: &[Name]) -> Name {
    if ch.len() == 1 {
        ch[0].clone()
    } else {
        c.arrow(&ch[ch.len() - 1]).unwrap().tgt.clone()
    }
}

fn chain_obj(c: &FinCat, ch: &[Name], i: usize) -> Name {
    if i == 0 {
        ch[0].clone()
    } else {
        c.arrow(&ch[i]).unwrap().tgt.clone()
    }
}

fn chain_face(c: &FinCat, ch: &[Name], i: usize) -> Vec<Name> {
    let m = ch.len() - 1;
    let mut out = Vec::new();
    if i == 0 {
        out.push(chain_obj(c, ch, 1));
        out.extend(ch[2..].iter().cloned());
    } else if i == m {
        out.extend(ch[..m].iter().cloned());
    } else {
        out.push(ch[0].clone());
        out.extend(ch[1..i].iter().cloned());
        out.push(c.comp(&ch[i + 1], &ch[i]).clone());
        out.extend(ch[i + 2..].iter().cloned());
    }
    out
}

/// A relative-to-objects lax transformation between two simplices of the same
/// shape: components `sigma_{j,i} : x_{j,i} => y_{j,i}`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct RelTransf {
    pub from: Name,
    pub to: Name,
    pub comps: BTreeMap<(usize, usize), Name>,
}

impl RelTransf {
    pub fn name(&self) -> Name {
        let mut parts = vec![self.from.clone(), self.to.clone()];
        for (_, v) in &self.comps {
            parts.push(v.clone());
        }
        Name::node("rt", parts)
    }
}

/// Enumerates relative-to-objects transformations `x => y` and checks the
/// coherence `sigma_{k,i} . x_{k,j,i} = y_{k,j,i} . (sigma_{k,j} * sigma_{j,i})`.
fn rel_transformations(a: &TwoCat, x: &SimplexData, y: &SimplexData) -> Vec<RelTransf> {
    let m = x.level;
    if x.objs != y.objs {
        return vec![];
    }
    let mut pairs = Vec::new();
    for i in 0..=m {
        for j in i..=m {
            pairs.push((j, i));
        }
    }
    let mut out = Vec::new();
    let mut comps: BTreeMap<(usize, usize), Name> = BTreeMap::new();
    fn rec(
        a: &TwoCat,
        x: &SimplexData,
        y: &SimplexData,
        pairs: &[(usize, usize)],
        idx: usize,
        comps: &mut BTreeMap<(usize, usize), Name>,
        out: &mut Vec<RelTransf>,
    ) {
        let m = x.level;
        if idx == pairs.len() {
            // coherence
            for i in 0..=m {
                for j in i..=m {
                    for k in j..=m {
                        let lhs = a
                            .vcomp(&comps[&(k, i)], &x.comps[&(k, j, i)])
                            .clone();
                        let hstar = a.hcomp2(&comps[&(k, j)], &comps[&(j, i)]).clone();
                        let rhs = a.vcomp(&y.comps[&(k, j, i)], &hstar).clone();
                        if lhs != rhs {
                            return;
                        }
                    }
                }
            }
            // unit condition: sigma_{i,i} must be compatible with the units
            for i in 0..=m {
                let lhs = a.vcomp(&comps[&(i, i)], &x.units[i]).clone();
                if lhs != y.units[i] {
                    return;
                }
            }
            out.push(RelTransf {
                from: x.name(),
                to: y.name(),
                comps: comps.clone(),
            });
            return;
        }
        let (j, i) = pairs[idx];
        let (oi, oj) = (&x.objs[i], &x.objs[j]);
        for t in a.hom(oi, oj).arrows() {
            if t.src == x.ones[&(j, i)] && t.tgt == y.ones[&(j, i)] {
                comps.insert((j, i), t.name.clone());
                rec(a, x, y, pairs, idx + 1, comps, out);
                comps.remove(&(j, i));
            }
        }
    }
    rec(a, x, y, &pairs, 0, &mut comps, &mut out);
    out
}

/// A dimension-bounded simplicial object in Cat.
#[derive(Clone, Debug)]
pub struct SimplicialObjectInCat {
    pub dim: usize,
    pub at: Vec<FinCat>,
    /// face functors at level m (index m-1 stores the m-level faces)
    pub faces: Vec<Vec<CatFunctor>>,
    pub degens: Vec<Vec<CatFunctor>>,
}

impl SimplicialObjectInCat {
    pub fn validate(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        for c in &self.at {
            r.merge(c.validate());
        }
        for fs in self.faces.iter().chain(self.degens.iter()) {
            for f in fs {
                r.merge(f.validate());
            }
        }
        if !r.is_empty() {
            return r;
        }
        // simplicial identities as functor equalities, via composition
        for m in 2..=self.dim {
            for j in 1..=m {
                for i in 0..j {
                    let lhs = self.faces[m - 2][i]
                        .compose(&self.faces[m - 1][j])
                        .unwrap();
                    let rhs = self.faces[m - 2][j - 1]
                        .compose(&self.faces[m - 1][i])
                        .unwrap();
                    if lhs.on_obj != rhs.on_obj || lhs.on_arr != rhs.on_arr {
                        r.push("ssetcat-id", vec![], format!("d{i} d{j} fails at level {m}"));
                    }
                }
            }
        }
        r
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CatNerveKind {
    UnderlinedLaxNor,
    Hom,
}

/// The Cat-valued nerves: level `m` has (normalized lax | strict) simplices
/// as objects and relative-to-objects transformations as morphisms.
pub fn nerf_cat(
    a: &TwoCat,
    kind: CatNerveKind,
    d: usize,
    budget: usize,
) -> Result<SimplicialObjectInCat> {
    let mut datas: Vec<Vec<SimplexData>> = Vec::new();
    for m in 0..=d {
        let mut l = enumerate_lax(m, a, true, budget)?;
        if matches!(kind, CatNerveKind::Hom) {
            l.retain(|x| x.comps.values().all(|c| a.is_identity_two(c)));
        }
        datas.push(l);
    }
    let mut at = Vec::new();
    let mut transfs: Vec<BTreeMap<Name, RelTransf>> = Vec::new();
    for lvl in &datas {
        let mut objs = Vec::new();
        let mut arrows = Vec::new();
        let mut identity = BTreeMap::new();
        let mut all: BTreeMap<Name, RelTransf> = BTreeMap::new();
        for x in lvl {
            objs.push(x.name());
        }
        for x in lvl {
            for y in lvl {
                for t in rel_transformations(a, x, y) {
                    let nm = t.name();
                    arrows.push(crate::cat::Arrow {
                        name: nm.clone(),
                        src: t.from.clone(),
                        tgt: t.to.clone(),
                    });
                    all.insert(nm.clone(), t);
                }
            }
        }
        for x in lvl {
            // identity transformation: all components identities
            let comps: BTreeMap<(usize, usize), Name> = x
                .ones
                .iter()
                .map(|(k, f)| (*k, a.vid(f).clone()))
                .collect();
            identity.insert(
                x.name(),
                RelTransf {
                    from: x.name(),
                    to: x.name(),
                    comps,
                }
                .name(),
            );
        }
        let mut comp = BTreeMap::new();
        for (n2, t2) in &all {
            for (n1, t1) in &all {
                if t1.to != t2.from {
                    continue;
                }
                let comps: BTreeMap<(usize, usize), Name> = t1
                    .comps
                    .iter()
                    .map(|(k, c1)| (*k, a.vcomp(&t2.comps[k], c1).clone()))
                    .collect();
                comp.insert(
                    (n2.clone(), n1.clone()),
                    RelTransf {
                        from: t1.from.clone(),
                        to: t2.to.clone(),
                        comps,
                    }
                    .name(),
                );
            }
        }
        at.push(FinCat::new_unchecked(objs, arrows, identity, comp));
        transfs.push(all);
    }
    // face/degeneracy functors by restriction
    let restrict_functor = |m_from: usize, phi: &Monotone| -> CatFunctor {
        let dom = Arc::new(at[m_from].clone());
        let cod = Arc::new(at[phi.dom].clone());
        let by_name: BTreeMap<Name, &SimplexData> = datas[m_from]
            .iter()
            .map(|x| (x.name(), x))
            .collect();
        let on_obj: BTreeMap<Name, Name> = dom
            .objects()
            .iter()
            .map(|o| (o.clone(), by_name[o].restrict(phi).name()))
            .collect();
        let on_arr: BTreeMap<Name, Name> = transfs[m_from]
            .iter()
            .map(|(nm, t)| {
                let from = by_name[&t.from].restrict(phi);
                let to = by_name[&t.to].restrict(phi);
                let comps: BTreeMap<(usize, usize), Name> = (0..=phi.dom)
                    .flat_map(|i| {
                        let t = &t.comps;
                        (i..=phi.dom).map(move |j| {
                            ((j, i), t[&(phi.apply(j), phi.apply(i))].clone())
                        })
                    })
                    .collect();
                (
                    nm.clone(),
                    RelTransf {
                        from: from.name(),
                        to: to.name(),
                        comps,
                    }
                    .name(),
                )
            })
            .collect();
        CatFunctor {
            dom,
            cod,
            on_obj,
            on_arr,
        }
    };
    let mut faces = Vec::new();
    let mut degens = Vec::new();
    for m in 1..=d {
        faces.push(
            (0..=m)
                .map(|i| restrict_functor(m, &Monotone::coface(m, i)))
                .collect(),
        );
    }
    for m in 0..d {
        degens.push(
            (0..=m)
                .map(|i| restrict_functor(m, &Monotone::codegeneracy(m, i)))
                .collect(),
        );
    }
    let obj = SimplicialObjectInCat {
        dim: d,
        at,
        faces,
        degens,
    };
    let r = obj.validate();
    if r.is_empty() {
        Ok(obj)
    } else {
        Err(Error::Invalid(r))
    }
}

/// The displayed coproduct-of-hom-products category at level m, with the
/// canonical identification functor from the level category of the hom nerve.
pub fn hom_level_formula(a: &TwoCat, m: usize) -> FinCat {
    // objects: tuples (a_0..a_m; f_1..f_m); arrows: tuples of 2-cells
    let mut tuples: Vec<Vec<Name>> = vec![vec![]];
    for _ in 0..=m {
        let mut next = Vec::new();
        for t in &tuples {
            for o in a.objects() {
                let mut t2 = t.clone();
                t2.push(o.clone());
                next.push(t2);
            }
        }
        tuples = next;
    }
    let mut objs = Vec::new();
    let mut arrows = Vec::new();
    let mut identity = BTreeMap::new();
    let mut comp = BTreeMap::new();
    for objs_tuple in &tuples {
        // 1-cell tuples
        let mut fs: Vec<Vec<Name>> = vec![vec![]];
        for i in 0..m {
            let mut next = Vec::new();
            for t in &fs {
                for f in a.hom(&objs_tuple[i], &objs_tuple[i + 1]).objects() {
                    let mut t2 = t.clone();
                    t2.push(f.clone());
                    next.push(t2);
                }
            }
            fs = next;
        }
        for f_tuple in &fs {
            let mut parts = objs_tuple.clone();
            parts.extend(f_tuple.iter().cloned());
            objs.push(Name::node("tup", parts));
        }
        // arrows: tuples of 2-cells between 1-cell tuples
        for f_tuple in &fs {
            for g_tuple in &fs {
                let mut choices: Vec<Vec<Name>> = vec![vec![]];
                for i in 0..m {
                    let mut next = Vec::new();
                    for t in &choices {
                        for al in a
                            .hom(&objs_tuple[i], &objs_tuple[i + 1])
                            .arrows()
                            .iter()
                            .filter(|al| al.src == f_tuple[i] && al.tgt == g_tuple[i])
                        {
                            let mut t2 = t.clone();
                            t2.push(al.name.clone());
                            next.push(t2);
                        }
                    }
                    choices = next;
                }
                for als in &choices {
                    let mut sp = objs_tuple.clone();
                    sp.extend(f_tuple.iter().cloned());
                    let mut tp = objs_tuple.clone();
                    tp.extend(g_tuple.iter().cloned());
                    let mut ap = objs_tuple.clone();
                    ap.extend(als.iter().cloned());
                    ap.extend(f_tuple.iter().cloned());
                    arrows.push(crate::cat::Arrow {
                        name: Name::node("tup2", ap),
                        src: Name::node("tup", sp),
                        tgt: Name::node("tup", tp),
                    });
                }
            }
        }
    }
    for o in &objs {
        if let Name::Node("tup", p) = o {
            let objs_tuple = &p[..=m];
            let f_tuple = &p[m + 1..];
            let mut ap: Vec<Name> = objs_tuple.to_vec();
            for f in f_tuple {
                ap.push(a.vid(f).clone());
            }
            ap.extend(f_tuple.iter().cloned());
            identity.insert(o.clone(), Name::node("tup2", ap));
        }
    }
    for a2 in &arrows {
        for a1 in &arrows {
            if a1.tgt != a2.src {
                continue;
            }
            if let (Name::Node("tup2", p2), Name::Node("tup2", p1)) = (&a2.name, &a1.name) {
                let objs_tuple = &p1[..=m];
                let als2 = &p2[m + 1..m + 1 + m];
                let als1 = &p1[m + 1..m + 1 + m];
                let f_tuple = &p1[m + 1 + m..];
                let mut ap: Vec<Name> = objs_tuple.to_vec();
                for i in 0..m {
                    ap.push(a.vcomp(&als2[i], &als1[i]).clone());
                }
                ap.extend(f_tuple.iter().cloned());
                comp.insert(
                    (a2.name.clone(), a1.name.clone()),
                    Name::node("tup2", ap),
                );
            }
        }
    }
    FinCat::new_unchecked(objs, arrows, identity, comp)
}

/// The truncated category of elements of a bounded simplicial set, graded by
/// level; all homotopy readings must respect the truncation bound.
pub fn delta_over(x: &SimplicialSet) -> FinCat {
    cat_of_elements(&x.as_presheaf())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::ordinal;
    use crate::twocat::terminal;

    #[test]
    fn terminal_has_singleton_levels() {
        let e = terminal();
        for kind in [NerveKind::Lax, NerveKind::LaxNor] {
            let n = nerf(&e, kind, 3, 1000).unwrap();
            for m in 0..=3 {
                assert_eq!(n.levels[m].len(), 1, "level {m}");
            }
        }
    }

    #[test]
    fn arrow_laxnor_level_counts() {
        let a = from_cat(&ordinal(1));
        let n = nerf(&a, NerveKind::LaxNor, 3, 10_000).unwrap();
        let sizes: Vec<usize> = n.levels.iter().map(|l| l.len()).collect();
        assert_eq!(sizes, vec![2, 3, 4, 5]);
    }

    #[test]
    fn lax_equals_laxnor_on_categories() {
        let a = from_cat(&ordinal(1));
        for m in 0..=3 {
            let lax = enumerate_lax(m, &a, false, 10_000).unwrap();
            let nor = enumerate_lax(m, &a, true, 10_000).unwrap();
            assert_eq!(lax, nor, "level {m}");
        }
    }

    #[test]
    fn budget_error_is_explicit() {
        let a = from_cat(&ordinal(1));
        let e = enumerate_lax(2, &a, true, 2);
        assert!(matches!(e, Err(Error::Budget { .. })));
    }

    #[test]
    fn nerve_of_cat_matches_nerf_counts() {
        let c = ordinal(1);
        let n1 = nerve_of_cat(&c, 3);
        assert!(n1.validate().is_empty());
        let n2 = nerf(&from_cat(&c), NerveKind::LaxNor, 3, 10_000).unwrap();
        for m in 0..=3 {
            assert_eq!(n1.levels[m].len(), n2.levels[m].len());
        }
    }

    #[test]
    fn delta_over_of_point_is_delta() {
        let e = terminal();
        let n = nerf(&e, NerveKind::LaxNor, 2, 100).unwrap();
        let el = delta_over(&n);
        assert!(el.validate().is_empty());
        let d = delta_leq(2);
        assert_eq!(el.objects().len(), d.objects().len());
        assert_eq!(el.arrows().len(), d.arrows().len());
    }

    #[test]
    fn delta_over_arrow_counts() {
        // X = N([1]) truncated at d = 3: object counts per level 2,3,4,5
        let a = from_cat(&ordinal(1));
        let n = nerf(&a, NerveKind::LaxNor, 3, 10_000).unwrap();
        let el = delta_over(&n);
        assert_eq!(el.objects().len(), 2 + 3 + 4 + 5);
    }

    #[test]
    fn hom_nerve_level_formula() {
        let a = from_cat(&ordinal(1));
        let n = nerf_cat(&a, CatNerveKind::Hom, 2, 10_000).unwrap();
        for m in 0..=2 {
            let formula = hom_level_formula(&a, m);
            assert_eq!(n.at[m].objects().len(), formula.objects().len());
            assert_eq!(n.at[m].arrows().len(), formula.arrows().len());
        }
    }
}
