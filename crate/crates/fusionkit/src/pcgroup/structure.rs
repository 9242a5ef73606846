//! Structural invariants of built 2-groups. Subgroups are explicit sorted
//! element sets; everything is computed by exhaustion, which is exact and
//! cheap at the 2^12 scale this module is capped to.

use std::collections::{BTreeSet, HashSet};

use crate::{elemab, gf2, Error, Result};

use super::group::{PcElem, PcGroup};

/// A subgroup of a [`PcGroup`], stored as its full sorted element set together
/// with a small generating list (derived greedily in ascending element order,
/// so it is canonical for the set).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Subgroup {
    elems: Vec<u16>,
    gens: Vec<u16>,
}

impl Subgroup {
    /// Subgroup generated by `seeds`.
    pub fn closure(g: &PcGroup, seeds: &[PcElem]) -> Subgroup {
        let elems = closure_set(g, seeds.iter().map(|e| e.0));
        let gens = greedy_generators(g, &elems);
        Subgroup { elems, gens }
    }

    /// Wrap an explicit element set, verifying it is closed and contains the
    /// identity.
    pub fn from_elements(g: &PcGroup, elems: &[PcElem]) -> Result<Subgroup> {
        let mut sorted: Vec<u16> = elems.iter().map(|e| e.0).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.first() != Some(&0) {
            return Err(Error::Parse(
                "element set does not contain the identity".into(),
            ));
        }
        let set: HashSet<u16> = sorted.iter().copied().collect();
        for &a in &sorted {
            for &b in &sorted {
                if !set.contains(&g.mul(PcElem(a), PcElem(b)).0) {
                    return Err(Error::Parse(format!(
                        "element set is not closed: {} * {}",
                        g.format_elem(PcElem(a)),
                        g.format_elem(PcElem(b))
                    )));
                }
            }
        }
        let gens = greedy_generators(g, &sorted);
        Ok(Subgroup {
            elems: sorted,
            gens,
        })
    }

    pub fn trivial() -> Subgroup {
        Subgroup {
            elems: vec![0],
            gens: Vec::new(),
        }
    }

    pub fn whole(g: &PcGroup) -> Subgroup {
        let elems: Vec<u16> = (0..g.order() as u32).map(|u| u as u16).collect();
        let gens = (0..g.generator_count()).map(|i| 1u16 << i).collect();
        Subgroup { elems, gens }
    }

    pub fn order(&self) -> usize {
        self.elems.len()
    }

    pub fn contains(&self, e: PcElem) -> bool {
        self.elems.binary_search(&e.0).is_ok()
    }

    pub fn is_subset_of(&self, other: &Subgroup) -> bool {
        self.elems
            .iter()
            .all(|&e| other.elems.binary_search(&e).is_ok())
    }

    pub fn elements(&self) -> impl Iterator<Item = PcElem> + '_ {
        self.elems.iter().map(|&u| PcElem(u))
    }

    pub fn generators(&self) -> impl Iterator<Item = PcElem> + '_ {
        self.gens.iter().map(|&u| PcElem(u))
    }

    pub fn element_masks(&self) -> &[u16] {
        &self.elems
    }

    pub fn is_abelian(&self, g: &PcGroup) -> bool {
        self.gens.iter().all(|&a| {
            self.gens
                .iter()
                .all(|&b| g.mul(PcElem(a), PcElem(b)) == g.mul(PcElem(b), PcElem(a)))
        })
    }

    pub fn exponent(&self, g: &PcGroup) -> usize {
        self.elements().map(|e| g.elem_order(e)).max().unwrap_or(1)
    }

    pub fn is_elementary_abelian(&self, g: &PcGroup) -> bool {
        self.is_abelian(g) && self.exponent(g) <= 2
    }

    /// log2 of the order.
    pub fn rank_if_elementary(&self, g: &PcGroup) -> Option<u32> {
        self.is_elementary_abelian(g)
            .then(|| self.order().trailing_zeros())
    }

    pub fn format(&self, g: &PcGroup) -> String {
        let gens: Vec<String> = self
            .gens
            .iter()
            .map(|&u| g.format_elem(PcElem(u)))
            .collect();
        format!("<{}>", gens.join(", "))
    }
}

fn closure_set(g: &PcGroup, seeds: impl Iterator<Item = u16>) -> Vec<u16> {
    let seeds: Vec<u16> = seeds.collect();
    let mut seen = vec![false; g.order()];
    seen[0] = true;
    let mut frontier = vec![0u16];
    let mut all = vec![0u16];
    while let Some(a) = frontier.pop() {
        for &s in &seeds {
            let p = g.mul(PcElem(a), PcElem(s)).0;
            if !seen[p as usize] {
                seen[p as usize] = true;
                all.push(p);
                frontier.push(p);
            }
        }
    }
    all.sort_unstable();
    all
}

fn greedy_generators(g: &PcGroup, elems: &[u16]) -> Vec<u16> {
    let mut gens: Vec<u16> = Vec::new();
    let mut have: HashSet<u16> = [0u16].into();
    for &e in elems {
        if !have.contains(&e) {
            gens.push(e);
            have = closure_set(g, gens.iter().copied()).into_iter().collect();
        }
    }
    gens
}

fn normal_closure(g: &PcGroup, seeds: &[u16]) -> Subgroup {
    let mut current = closure_set(g, seeds.iter().copied());
    loop {
        let mut extra: Vec<u16> = Vec::new();
        let set: HashSet<u16> = current.iter().copied().collect();
        for &h in &current {
            for i in 0..g.generator_count() {
                let c = g.conj(PcElem(h), g.generator(i)).0;
                if !set.contains(&c) {
                    extra.push(c);
                }
            }
        }
        if extra.is_empty() {
            let gens = greedy_generators(g, &current);
            return Subgroup {
                elems: current,
                gens,
            };
        }
        extra.extend_from_slice(&current);
        current = closure_set(g, extra.into_iter());
    }
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum CharacteristicKind {
    Center,
    Derived,
    Frattini,
    Omega1,
    Agemo1,
}

/// Exact characteristic subgroups by exhaustion. `Omega1` is the subgroup
/// *generated* by the involutions, `Agemo1` the subgroup generated by the
/// squares; `Frattini` uses the Burnside basis identity `Phi = G' U^1(G)` for
/// p-groups (an independent route via maximal subgroups is
/// [`index_two_subgroups`]).
pub fn characteristic_subgroup(g: &PcGroup, kind: CharacteristicKind) -> Subgroup {
    match kind {
        CharacteristicKind::Center => {
            let gens: Vec<PcElem> = (0..g.generator_count()).map(|i| g.generator(i)).collect();
            let elems: Vec<u16> = g
                .elements()
                .filter(|&u| gens.iter().all(|&s| g.mul(u, s) == g.mul(s, u)))
                .map(|u| u.0)
                .collect();
            let gens = greedy_generators(g, &elems);
            Subgroup { elems, gens }
        }
        CharacteristicKind::Derived => {
            let mut seeds: BTreeSet<u16> = BTreeSet::new();
            for u in g.elements() {
                for i in 0..g.generator_count() {
                    seeds.insert(g.comm(u, g.generator(i)).0);
                }
            }
            let seeds: Vec<u16> = seeds.into_iter().collect();
            normal_closure(g, &seeds)
        }
        CharacteristicKind::Frattini => {
            let mut seeds: BTreeSet<u16> = g.elements().map(|u| g.square(u).0).collect();
            seeds.extend(characteristic_subgroup(g, CharacteristicKind::Derived).elems);
            let elems = closure_set(g, seeds.into_iter());
            let gens = greedy_generators(g, &elems);
            Subgroup { elems, gens }
        }
        CharacteristicKind::Omega1 => {
            let seeds: Vec<u16> = g
                .elements()
                .filter(|&u| g.is_involution(u))
                .map(|u| u.0)
                .collect();
            let elems = closure_set(g, seeds.into_iter());
            let gens = greedy_generators(g, &elems);
            Subgroup { elems, gens }
        }
        CharacteristicKind::Agemo1 => {
            let seeds: BTreeSet<u16> = g.elements().map(|u| g.square(u).0).collect();
            let elems = closure_set(g, seeds.into_iter());
            let gens = greedy_generators(g, &elems);
            Subgroup { elems, gens }
        }
    }
}

/// All subgroups of index 2, via the homomorphisms onto C2. A sign vector on
/// the generators defines such a homomorphism exactly when every defining
/// relation maps to 0, which is a linear condition over F2; the kernels of the
/// nonzero solutions are the maximal subgroups. Their intersection is an
/// independent route to the Frattini subgroup.
pub fn index_two_subgroups(g: &PcGroup) -> Vec<Subgroup> {
    let n = g.generator_count();
    let mut sys = gf2::LinearSystem::new(n);
    let word_parity = |w: &[usize]| -> Vec<u64> {
        let mut v = gf2::bitvec_zero(n);
        for &l in w {
            let cur = gf2::bitvec_get(&v, l);
            gf2::bitvec_set(&mut v, l, !cur);
        }
        v
    };
    let pres = g.presentation();
    for i in 0..n {
        sys.add_equation(&word_parity(pres.power_word(i)), false);
    }
    for j in 0..n {
        for i in 0..j {
            sys.add_equation(&word_parity(pres.commutator_word(j, i)), false);
        }
    }
    let basis: Vec<u16> = sys
        .nullspace_basis()
        .iter()
        .map(|v| {
            (0..n)
                .filter(|&i| gf2::bitvec_get(v, i))
                .fold(0u16, |m, i| m | 1 << i)
        })
        .collect();
    let mut masks: BTreeSet<u16> = BTreeSet::new();
    for combo in 1u32..1 << basis.len() {
        let m = basis
            .iter()
            .enumerate()
            .filter(|(b, _)| combo >> b & 1 == 1)
            .fold(0u16, |acc, (_, &v)| acc ^ v);
        if m != 0 {
            masks.insert(m);
        }
    }
    masks
        .into_iter()
        .map(|m| {
            let elems: Vec<PcElem> = g
                .elements()
                .filter(|u| (u.0 & m).count_ones() % 2 == 0)
                .collect();
            Subgroup::from_elements(g, &elems).expect("character kernel is a subgroup")
        })
        .collect()
}

/// The set A(G) of elementary abelian subgroups of maximal order, in
/// lexicographic order of their element sets.
pub fn max_elementary_abelians(g: &PcGroup) -> Vec<Subgroup> {
    let mul = |a: usize, b: usize| g.mul(PcElem(a as u16), PcElem(b as u16)).0 as usize;
    elemab::maximal_order_elementary_abelians(g.order(), 0, &mul)
        .into_iter()
        .map(|elems| {
            let elems: Vec<u16> = elems.into_iter().map(|e| e as u16).collect();
            let gens = greedy_generators(g, &elems);
            Subgroup { elems, gens }
        })
        .collect()
}

/// Thompson subgroup: generated by all members of A(G).
pub fn thompson_subgroup(g: &PcGroup) -> Subgroup {
    let seeds: Vec<PcElem> = max_elementary_abelians(g)
        .iter()
        .flat_map(|s| s.elements().collect::<Vec<_>>())
        .collect();
    Subgroup::closure(g, &seeds)
}

/// 2-rank: largest rank of an elementary abelian subgroup.
pub fn two_rank(g: &PcGroup) -> u32 {
    max_elementary_abelians(g)[0].order().trailing_zeros()
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LocalKind {
    Centralizer,
    Normalizer,
}

/// Pointwise centralizer or setwise normalizer of a subgroup, by exhaustion.
pub fn local_subgroup(g: &PcGroup, h: &Subgroup, kind: LocalKind) -> Subgroup {
    let hgens: Vec<PcElem> = h.generators().collect();
    let elems: Vec<u16> = g
        .elements()
        .filter(|&x| match kind {
            LocalKind::Centralizer => hgens.iter().all(|&s| g.mul(x, s) == g.mul(s, x)),
            LocalKind::Normalizer => hgens.iter().all(|&s| h.contains(g.conj(s, x))),
        })
        .map(|u| u.0)
        .collect();
    let gens = greedy_generators(g, &elems);
    Subgroup { elems, gens }
}

/// An extensional map on the elements of `g`: `images[u]` is the image of the
/// element with mask `u`.
pub type ElemMap = Vec<u16>;

/// Extend generator images multiplicatively along normal forms. The result is
/// only a candidate automorphism; [`involution_classes_under`] verifies it.
pub fn map_from_generator_images(g: &PcGroup, images: &[PcElem]) -> ElemMap {
    assert_eq!(images.len(), g.generator_count());
    g.elements()
        .map(|u| {
            (0..g.generator_count())
                .filter(|&i| u.exponent(i))
                .fold(PcElem::IDENTITY, |acc, i| g.mul(acc, images[i]))
                .0
        })
        .collect()
}

fn verify_automorphism(g: &PcGroup, map: &ElemMap) -> Result<()> {
    if map.len() != g.order() {
        return Err(Error::NotAutomorphism(format!(
            "map has {} entries, group has {} elements",
            map.len(),
            g.order()
        )));
    }
    let mut seen = vec![false; g.order()];
    for &v in map {
        if v as usize >= g.order() || std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::NotAutomorphism("map is not a bijection".into()));
        }
    }
    // Checking phi(u g_i) = phi(u) phi(g_i) for every element u and generator
    // g_i certifies the homomorphism property on all pairs by induction on
    // normal forms.
    for u in g.elements() {
        for i in 0..g.generator_count() {
            let s = g.generator(i);
            let lhs = map[g.mul(u, s).0 as usize];
            let rhs = g
                .mul(PcElem(map[u.0 as usize]), PcElem(map[s.0 as usize]))
                .0;
            if lhs != rhs {
                return Err(Error::NotAutomorphism(format!(
                    "fails at {} * {}",
                    g.format_elem(u),
                    g.format_elem(s)
                )));
            }
        }
    }
    Ok(())
}

/// Orbit partition of the involutions of `g` under the group generated by the
/// supplied automorphisms together with all inner automorphisms. Each supplied
/// map is verified first. Classes are sorted internally and by least member.
pub fn involution_classes_under(g: &PcGroup, maps: &[ElemMap]) -> Result<Vec<Vec<PcElem>>> {
    for map in maps {
        verify_automorphism(g, map)?;
    }
    let involutions: Vec<u16> = g
        .elements()
        .filter(|&u| g.is_involution(u))
        .map(|u| u.0)
        .collect();
    let mut class_of = vec![usize::MAX; g.order()];
    let mut classes: Vec<Vec<PcElem>> = Vec::new();
    for &start in &involutions {
        if class_of[start as usize] != usize::MAX {
            continue;
        }
        let idx = classes.len();
        let mut orbit = vec![start];
        class_of[start as usize] = idx;
        let mut frontier = vec![start];
        while let Some(x) = frontier.pop() {
            let mut images: Vec<u16> = maps.iter().map(|m| m[x as usize]).collect();
            for i in 0..g.generator_count() {
                images.push(g.conj(PcElem(x), g.generator(i)).0);
            }
            for y in images {
                if class_of[y as usize] == usize::MAX {
                    class_of[y as usize] = idx;
                    orbit.push(y);
                    frontier.push(y);
                }
            }
        }
        orbit.sort_unstable();
        classes.push(orbit.into_iter().map(PcElem).collect());
    }
    Ok(classes)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoTag {
    Cyclic,
    ElementaryAbelian,
    Homocyclic { exponent: usize },
    Dihedral,
    Semidihedral,
    Quaternion,
    Other,
}

/// Isomorphism type of a group of order at most 16, from exact structural
/// tests rather than a classification table.
pub fn isomorphism_type_small(g: &PcGroup) -> Result<IsoTag> {
    subgroup_isomorphism_type(g, &Subgroup::whole(g))
}

pub fn subgroup_isomorphism_type(g: &PcGroup, h: &Subgroup) -> Result<IsoTag> {
    let order = h.order();
    if order > 16 {
        return Err(Error::TooLarge(format!(
            "order {order} exceeds the tag bound 16"
        )));
    }
    let elems: Vec<PcElem> = h.elements().collect();
    if elems.iter().any(|&e| g.elem_order(e) == order) {
        return Ok(IsoTag::Cyclic);
    }
    if h.is_elementary_abelian(g) {
        return Ok(IsoTag::ElementaryAbelian);
    }
    if h.is_abelian(g) {
        let exponent = h.exponent(g);
        let omega1 = elems
            .iter()
            .filter(|&&e| g.square(e) == PcElem::IDENTITY)
            .count();
        let m = exponent.trailing_zeros() as usize;
        if omega1.pow(m as u32) == order {
            return Ok(IsoTag::Homocyclic { exponent });
        }
        return Ok(IsoTag::Other);
    }
    let involutions: Vec<PcElem> = elems
        .iter()
        .copied()
        .filter(|&e| g.is_involution(e))
        .collect();
    if involutions.len() == 1 {
        return Ok(IsoTag::Quaternion);
    }
    let twisted = |power: usize| -> bool {
        elems.iter().any(|&r| {
            g.elem_order(r) == order / 2
                && involutions.iter().any(|&s| {
                    let mut in_r = false;
                    let mut p = r;
                    for _ in 0..order / 2 {
                        if p == s {
                            in_r = true;
                        }
                        p = g.mul(p, r);
                    }
                    let target = (0..power).fold(PcElem::IDENTITY, |acc, _| g.mul(acc, r));
                    !in_r && g.conj(r, s) == target
                })
        })
    };
    if twisted(order / 2 - 1) {
        return Ok(IsoTag::Dihedral);
    }
    if order == 16 && twisted(3) {
        return Ok(IsoTag::Semidihedral);
    }
    Ok(IsoTag::Other)
}
