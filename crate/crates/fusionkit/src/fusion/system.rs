//! The fusion system `F_S(G)` of a finite group at desk scale: morphism sets
//! computed two independent ways, the standard subgroup classification
//! predicates evaluated literally from their definitions, local subsystems
//! with their group-theoretic identities, and generation/control checks.

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::RwLock;

use crate::{Error, Result};

use super::group::{sylow2_of_set, PermGroup, PermSet};
use super::perm::Perm;

/// A fusion morphism: the graph of a conjugation map on a subgroup. The
/// domain is sorted; `images[i]` is the image of `domain[i]`. Two group
/// elements inducing the same graph are the same morphism.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ConjMap {
    domain: Vec<Perm>,
    images: Vec<Perm>,
}

impl ConjMap {
    pub fn from_conjugation(domain: &PermSet, g: &Perm) -> ConjMap {
        ConjMap {
            domain: domain.elements().to_vec(),
            images: domain.elements().iter().map(|p| p.conj(g)).collect(),
        }
    }

    pub fn identity_on(domain: &PermSet) -> ConjMap {
        ConjMap {
            domain: domain.elements().to_vec(),
            images: domain.elements().to_vec(),
        }
    }

    pub fn domain(&self) -> &[Perm] {
        &self.domain
    }

    pub fn apply(&self, p: &Perm) -> Option<&Perm> {
        self.domain.binary_search(p).ok().map(|i| &self.images[i])
    }

    pub fn preimage(&self, y: &Perm) -> Option<&Perm> {
        self.images
            .iter()
            .position(|i| i == y)
            .map(|i| &self.domain[i])
    }

    /// Tabulate a function on a subgroup; `None` if it is undefined anywhere.
    pub fn graph_of(domain: &PermSet, f: impl Fn(&Perm) -> Option<Perm>) -> Option<ConjMap> {
        let images: Option<Vec<Perm>> = domain.elements().iter().map(f).collect();
        Some(ConjMap {
            domain: domain.elements().to_vec(),
            images: images?,
        })
    }

    pub fn image_elems(&self) -> Vec<Perm> {
        let mut v = self.images.clone();
        v.sort_unstable();
        v
    }

    pub fn image_set(&self) -> PermSet {
        PermSet::from_elements(self.images.clone()).expect("morphism image is a subgroup")
    }

    pub fn image_in(&self, target: &PermSet) -> bool {
        self.images.iter().all(|p| target.contains(p))
    }

    /// Restrict to a subgroup of the domain.
    pub fn restrict(&self, sub: &PermSet) -> ConjMap {
        ConjMap {
            domain: sub.elements().to_vec(),
            images: sub
                .elements()
                .iter()
                .map(|p| {
                    self.apply(p)
                        .expect("restriction inside the domain")
                        .clone()
                })
                .collect(),
        }
    }

    pub fn restricts_to(&self, other: &ConjMap) -> bool {
        other
            .domain
            .iter()
            .zip(&other.images)
            .all(|(p, q)| self.apply(p) == Some(q))
    }

    pub fn is_identity(&self) -> bool {
        self.domain == self.images
    }

    pub fn fixes_setwise(&self, sub: &PermSet) -> bool {
        sub.elements().iter().all(|p| match self.apply(p) {
            Some(q) => sub.contains(q),
            None => false,
        })
    }

    pub fn fixes_pointwise(&self, sub: &PermSet) -> bool {
        sub.elements().iter().all(|p| self.apply(p) == Some(p))
    }

    /// `self` then `other` (morphisms act on the right); the image of `self`
    /// must lie in the domain of `other`.
    pub fn then(&self, other: &ConjMap) -> ConjMap {
        ConjMap {
            domain: self.domain.clone(),
            images: self
                .images
                .iter()
                .map(|p| other.apply(p).expect("composable").clone())
                .collect(),
        }
    }
}

/// Classification flags of one subgroup in the fusion system.
#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub struct SubgroupFlags {
    pub fully_normalized: bool,
    pub fully_centralized: bool,
    pub centric: bool,
    pub radical: bool,
    pub weakly_closed: bool,
}

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum LocalSubsystemKind {
    Centralizer,
    Normalizer,
}

/// Subgroup count cap for full-lattice sweeps.
const MAX_SUBGROUPS: usize = 4096;

type HomCache = RwLock<HashMap<(Vec<Perm>, Vec<Perm>), Vec<ConjMap>>>;

pub struct FusionSystem {
    group: PermGroup,
    sylow: PermSet,
    whole: PermSet,
    hom_cache: HomCache,
}

impl FusionSystem {
    /// Build `F_S(G)`; `sylow` must be a 2-subgroup of odd index.
    pub fn new(group: PermGroup, sylow: PermSet) -> Result<FusionSystem> {
        let whole = group.as_set()?;
        if !sylow.is_subset_of(&whole) {
            return Err(Error::NotInSylow);
        }
        if !sylow.is_2_group() || (group.order() / sylow.order()).is_multiple_of(2) {
            return Err(Error::Parse(
                "the distinguished subgroup is not a Sylow 2-subgroup".into(),
            ));
        }
        Ok(FusionSystem {
            group,
            sylow,
            whole,
            hom_cache: RwLock::new(HashMap::new()),
        })
    }

    /// `F_S(G)` with `S` computed by normalizer climbing.
    pub fn of_group(group: PermGroup) -> Result<FusionSystem> {
        let whole = group.as_set()?;
        let sylow = sylow2_of_set(&whole, None);
        FusionSystem::new(group, sylow)
    }

    pub fn group(&self) -> &PermGroup {
        &self.group
    }

    pub fn sylow(&self) -> &PermSet {
        &self.sylow
    }

    pub fn degree(&self) -> usize {
        self.group.degree()
    }

    fn check_in_sylow(&self, p: &PermSet) -> Result<()> {
        if p.is_subset_of(&self.sylow) {
            Ok(())
        } else {
            Err(Error::NotInSylow)
        }
    }

    /// All morphisms `P -> Q`: restrictions of conjugations `c_g` with
    /// `P^g <= Q`, deduplicated as graphs. Exhaustive route over all group
    /// elements; results are cached.
    pub fn hom_sets(&self, p: &PermSet, q: &PermSet) -> Result<Vec<ConjMap>> {
        self.check_in_sylow(p)?;
        self.check_in_sylow(q)?;
        let key = (p.elements().to_vec(), q.elements().to_vec());
        if let Some(hit) = self.hom_cache.read().expect("cache lock").get(&key) {
            return Ok(hit.clone());
        }
        let mut maps: HashSet<ConjMap> = HashSet::new();
        for g in self.whole.elements() {
            if p.generators().iter().all(|s| q.contains(&s.conj(g))) {
                maps.insert(ConjMap::from_conjugation(p, g));
            }
        }
        let mut maps: Vec<ConjMap> = maps.into_iter().collect();
        maps.sort_unstable();
        self.hom_cache
            .write()
            .expect("cache lock")
            .insert(key, maps.clone());
        Ok(maps)
    }

    /// Independent route: orbit of the inclusion graph of `P` under
    /// post-composition with generator conjugations, filtered by image in
    /// `Q`. Never touches nongenerator group elements.
    pub fn hom_sets_transversal(&self, p: &PermSet, q: &PermSet) -> Result<Vec<ConjMap>> {
        self.check_in_sylow(p)?;
        self.check_in_sylow(q)?;
        let start = ConjMap::identity_on(p);
        let mut seen: HashSet<ConjMap> = [start.clone()].into();
        let mut queue = VecDeque::from([start]);
        while let Some(m) = queue.pop_front() {
            for g in self.group.generators() {
                let next = ConjMap {
                    domain: m.domain.clone(),
                    images: m.images.iter().map(|x| x.conj(g)).collect(),
                };
                if seen.insert(next.clone()) {
                    queue.push_back(next);
                }
            }
        }
        let mut maps: Vec<ConjMap> = seen.into_iter().filter(|m| m.image_in(q)).collect();
        maps.sort_unstable();
        Ok(maps)
    }

    pub fn aut(&self, p: &PermSet) -> Result<Vec<ConjMap>> {
        self.hom_sets(p, p)
    }

    /// Inner automorphisms of `P` as graphs.
    pub fn inn(&self, p: &PermSet) -> Vec<ConjMap> {
        let mut maps: HashSet<ConjMap> = HashSet::new();
        for g in p.elements() {
            maps.insert(ConjMap::from_conjugation(p, g));
        }
        let mut maps: Vec<ConjMap> = maps.into_iter().collect();
        maps.sort_unstable();
        maps
    }

    /// The conjugates of `P` lying inside `S`, with conjugating witnesses.
    pub fn f_class(&self, p: &PermSet) -> Result<Vec<(PermSet, Perm)>> {
        self.check_in_sylow(p)?;
        let id = Perm::identity(self.degree());
        let mut witness: HashMap<Vec<Perm>, Perm> = [(p.elements().to_vec(), id.clone())].into();
        let mut queue = VecDeque::from([(p.clone(), id)]);
        while let Some((current, w)) = queue.pop_front() {
            for g in self.group.generators() {
                let next = current.conjugate(g);
                let key = next.elements().to_vec();
                if let std::collections::hash_map::Entry::Vacant(e) = witness.entry(key) {
                    let nw = w.compose(g);
                    e.insert(nw.clone());
                    queue.push_back((next, nw));
                }
            }
        }
        let mut class: Vec<(PermSet, Perm)> = witness
            .into_iter()
            .filter(|(elems, _)| elems.iter().all(|e| self.sylow.contains(e)))
            .map(|(elems, w)| {
                (
                    PermSet::from_elements(elems).expect("conjugate subgroup"),
                    w,
                )
            })
            .collect();
        class.sort_unstable_by(|a, b| a.0.cmp(&b.0));
        Ok(class)
    }

    pub fn classify_subgroup(&self, p: &PermSet) -> Result<SubgroupFlags> {
        let class = self.f_class(p)?;
        let ns = |x: &PermSet| self.sylow.normalizer_of(x).order();
        let cs = |x: &PermSet| self.sylow.centralizer_of(x).order();
        let fully_normalized = class.iter().all(|(q, _)| ns(p) >= ns(q));
        let fully_centralized = class.iter().all(|(q, _)| cs(p) >= cs(q));
        let centric = class
            .iter()
            .all(|(q, _)| self.sylow.centralizer_of(q).is_subset_of(q));
        let weakly_closed = class.len() == 1;
        let radical = self.out_has_trivial_o2(p)?;
        Ok(SubgroupFlags {
            fully_normalized,
            fully_centralized,
            centric,
            radical,
            weakly_closed,
        })
    }

    /// `O_2(Out_F(P)) = 1`, via the finite group of automorphism graphs.
    fn out_has_trivial_o2(&self, p: &PermSet) -> Result<bool> {
        let auts = self.aut(p)?;
        let index: HashMap<&ConjMap, usize> =
            auts.iter().enumerate().map(|(i, m)| (m, i)).collect();
        let compose = |a: usize, b: usize| -> usize {
            let c = auts[a].then(&auts[b]);
            *index.get(&c).expect("automorphisms compose")
        };
        let inn: HashSet<usize> = self
            .inn(p)
            .iter()
            .map(|m| *index.get(m).expect("inner maps are fusion maps"))
            .collect();
        // right cosets of Inn, represented by their least member
        let mut coset_of: HashMap<usize, usize> = HashMap::new();
        let mut reps: Vec<usize> = Vec::new();
        for a in 0..auts.len() {
            if coset_of.contains_key(&a) {
                continue;
            }
            let members: Vec<usize> = inn.iter().map(|&i| compose(i, a)).collect();
            let rep = *members.iter().min().expect("nonempty coset");
            for m in members {
                coset_of.insert(m, rep);
            }
            if !reps.contains(&rep) {
                reps.push(rep);
            }
        }
        reps.sort_unstable();
        let rep_index: HashMap<usize, usize> =
            reps.iter().enumerate().map(|(i, &r)| (r, i)).collect();
        let qmul =
            |a: usize, b: usize| -> usize { rep_index[&coset_of[&compose(reps[a], reps[b])]] };
        let qid = rep_index[&coset_of[&index[&ConjMap::identity_on(p)]]];
        // O_2: elements whose normal closure is a 2-group
        for a in 0..reps.len() {
            if a == qid {
                continue;
            }
            // normal closure of a in the quotient
            let mut closure: HashSet<usize> = [qid].into();
            let mut frontier = vec![a];
            let mut class: HashSet<usize> = [a].into();
            while let Some(x) = frontier.pop() {
                for b in 0..reps.len() {
                    // b^{-1} x b: find inverse by scanning
                    let binv = (0..reps.len()).find(|&c| qmul(b, c) == qid).unwrap();
                    let cx = qmul(qmul(binv, x), b);
                    if class.insert(cx) {
                        frontier.push(cx);
                    }
                }
            }
            let seeds: Vec<usize> = class.into_iter().collect();
            let mut frontier: Vec<usize> = vec![qid];
            while let Some(x) = frontier.pop() {
                for &s in &seeds {
                    let y = qmul(x, s);
                    if closure.insert(y) {
                        frontier.push(y);
                    }
                }
            }
            if closure.len().is_power_of_two() && closure.len() > 1 {
                return Ok(false); // nontrivial normal 2-subgroup
            }
        }
        Ok(true)
    }

    /// A morphism defined on `N_S(P)` sending `P` to a fully normalized
    /// conjugate; with `target`, sends `P` to that particular fully
    /// normalized member of its class.
    pub fn fully_normalized_rep(
        &self,
        p: &PermSet,
        target: Option<&PermSet>,
    ) -> Result<(ConjMap, PermSet)> {
        let class = self.f_class(p)?;
        let ns = |x: &PermSet| self.sylow.normalizer_of(x).order();
        let best = class
            .iter()
            .map(|(q, _)| ns(q))
            .max()
            .expect("class nonempty");
        let (q, g0) = match target {
            Some(t) => class
                .iter()
                .find(|(q, _)| q == t)
                .ok_or_else(|| Error::Parse("target is not in the conjugacy class".into()))?,
            None if ns(p) == best => class
                .iter()
                .find(|(q, _)| q == p)
                .expect("P is in its own class"),
            None => class
                .iter()
                .find(|(q, _)| ns(q) == best)
                .expect("maximum attained"),
        };
        if ns(q) != best {
            return Err(Error::Parse("target is not fully normalized".into()));
        }
        // N_S(P)^{g0} is a 2-subgroup of N_G(Q); push it into the Sylow
        // subgroup N_S(Q) of N_G(Q) by an element of N_G(Q).
        let nsp = self.sylow.normalizer_of(p);
        let nsq = self.sylow.normalizer_of(q);
        let ngq: Vec<&Perm> = self
            .whole
            .elements()
            .iter()
            .filter(|n| q.generators().iter().all(|s| q.contains(&s.conj(n))))
            .collect();
        for n in ngq {
            let gn = g0.compose(n);
            if nsp.elements().iter().all(|s| nsq.contains(&s.conj(&gn))) {
                let alpha = ConjMap::from_conjugation(&nsp, &gn);
                return Ok((alpha, q.clone()));
            }
        }
        Err(Error::Parse(
            "no conjugator pushes the normalizer into the Sylow subgroup".into(),
        ))
    }

    /// All subgroups of the Sylow subgroup, by closure growth.
    pub fn all_sylow_subgroups(&self) -> Result<Vec<PermSet>> {
        let mut seen: HashSet<Vec<Perm>> = HashSet::new();
        let trivial = PermSet::trivial(self.degree());
        seen.insert(trivial.elements().to_vec());
        let mut queue = vec![trivial.clone()];
        let mut out = vec![trivial];
        while let Some(h) = queue.pop() {
            for s in self.sylow.elements() {
                if h.contains(s) {
                    continue;
                }
                let bigger = h.extend_by(std::slice::from_ref(s));
                if seen.insert(bigger.elements().to_vec()) {
                    if seen.len() > MAX_SUBGROUPS {
                        return Err(Error::TooLarge(format!(
                            "subgroup lattice of S exceeds {MAX_SUBGROUPS}"
                        )));
                    }
                    queue.push(bigger.clone());
                    out.push(bigger);
                }
            }
        }
        out.sort_unstable();
        Ok(out)
    }

    /// `O_2(F)` and `Z(F)` by descending scan with the literal maximality
    /// tests over all subgroup pairs of `S`.
    pub fn core_subgroups(&self) -> Result<(PermSet, PermSet)> {
        let subs = self.all_sylow_subgroups()?;
        let mut candidates: Vec<&PermSet> = subs
            .iter()
            .filter(|h| self.sylow.normalizer_of(h).order() == self.sylow.order())
            .collect();
        candidates.sort_by_key(|h| std::cmp::Reverse(h.order()));
        let mut o2: Option<PermSet> = None;
        for cand in &candidates {
            if self.is_normal_in_f(cand, &subs)? {
                o2 = Some((*cand).clone());
                break;
            }
        }
        let mut z: Option<PermSet> = None;
        let zs = self.sylow.center();
        for cand in &candidates {
            if !cand.is_subset_of(&zs) {
                continue;
            }
            if self.is_central_in_f(cand, &subs)? {
                z = Some((*cand).clone());
                break;
            }
        }
        Ok((
            o2.expect("the trivial subgroup is always normal"),
            z.expect("the trivial subgroup is always central"),
        ))
    }

    fn is_normal_in_f(&self, p: &PermSet, subs: &[PermSet]) -> Result<bool> {
        for q in subs {
            for r in subs {
                for phi in self.hom_sets(q, r)? {
                    let pq = p.extend_by(q.generators());
                    let pr = p.extend_by(r.generators());
                    let ok = self
                        .hom_sets(&pq, &pr)?
                        .iter()
                        .any(|ext| ext.fixes_setwise(p) && ext.restricts_to(&phi));
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    fn is_central_in_f(&self, p: &PermSet, subs: &[PermSet]) -> Result<bool> {
        for q in subs {
            for r in subs {
                for phi in self.hom_sets(q, r)? {
                    let pq = p.extend_by(q.generators());
                    let pr = p.extend_by(r.generators());
                    let ok = self
                        .hom_sets(&pq, &pr)?
                        .iter()
                        .any(|ext| ext.fixes_pointwise(p) && ext.restricts_to(&phi));
                    if !ok {
                        return Ok(false);
                    }
                }
            }
        }
        Ok(true)
    }

    /// `O_2(F)` is F-centric.
    pub fn constrained_check(&self) -> Result<bool> {
        let (o2, _) = self.core_subgroups()?;
        Ok(self.classify_subgroup(&o2)?.centric)
    }

    /// Generation in the sense of the fusion theorem: every morphism is a
    /// composite of restrictions of automizers of `S` and of the
    /// centric-radical fully-normalized subgroups. Checked by closing the
    /// generated subcategory and comparing hom-set sizes on every pair.
    pub fn alperin_generation_check(&self) -> Result<bool> {
        if self.group.order() > 100_000 {
            return Err(Error::TooLarge("generation check needs |G| <= 1e5".into()));
        }
        let subs = self.all_sylow_subgroups()?;
        let mut sources: Vec<&PermSet> = Vec::new();
        for h in &subs {
            if h.order() == self.sylow.order() {
                sources.push(h);
                continue;
            }
            let flags = self.classify_subgroup(h)?;
            if flags.centric && flags.radical && flags.fully_normalized {
                sources.push(h);
            }
        }
        let auts: Vec<(usize, Vec<ConjMap>)> = sources
            .iter()
            .enumerate()
            .map(|(i, r)| Ok((i, self.aut(r)?)))
            .collect::<Result<_>>()?;
        for q in &subs {
            let start = ConjMap::identity_on(q);
            let mut seen: HashSet<ConjMap> = [start.clone()].into();
            let mut queue = VecDeque::from([start]);
            while let Some(m) = queue.pop_front() {
                for (src_idx, alphas) in &auts {
                    let r = sources[*src_idx];
                    if !m.images.iter().all(|x| r.contains(x)) {
                        continue;
                    }
                    for alpha in alphas {
                        let next = ConjMap {
                            domain: m.domain.clone(),
                            images: m
                                .images
                                .iter()
                                .map(|x| alpha.apply(x).expect("image inside source").clone())
                                .collect(),
                        };
                        if seen.insert(next.clone()) {
                            queue.push_back(next);
                        }
                    }
                }
            }
            for r in &subs {
                let generated = seen.iter().filter(|m| m.image_in(r)).count();
                let full = self.hom_sets(q, r)?.len();
                if generated != full {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// Control of fusion in the center of a weakly closed subgroup: any two
    /// F-conjugate elements of `Z(W)` are `Aut_F(W)`-conjugate.
    pub fn burnside_control_check(&self, w: &PermSet) -> Result<bool> {
        if !self.classify_subgroup(w)?.weakly_closed {
            return Err(Error::NotWeaklyClosed);
        }
        let z = w.center();
        let auts = self.aut(w)?;
        for z1 in z.elements() {
            if z1.is_identity() {
                continue;
            }
            // elementwise orbit of z1 under the whole group
            let mut orbit: HashSet<Perm> = [z1.clone()].into();
            let mut frontier = vec![z1.clone()];
            while let Some(x) = frontier.pop() {
                for g in self.group.generators() {
                    let y = x.conj(g);
                    if orbit.insert(y.clone()) {
                        frontier.push(y);
                    }
                }
            }
            for z2 in z.elements() {
                if z2.is_identity() || z2 == z1 || !orbit.contains(z2) {
                    continue;
                }
                let fused = auts.iter().any(|a| a.apply(z1) == Some(z2));
                if !fused {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The carrier and membership data of a centralizer or normalizer
    /// subsystem.
    pub fn local_subsystem(&self, p: &PermSet, kind: LocalSubsystemKind) -> Result<SubsystemView> {
        self.check_in_sylow(p)?;
        let flags = self.classify_subgroup(p)?;
        let (carrier, precondition_ok) = match kind {
            LocalSubsystemKind::Centralizer => {
                (self.sylow.centralizer_of(p), flags.fully_centralized)
            }
            LocalSubsystemKind::Normalizer => (self.sylow.normalizer_of(p), flags.fully_normalized),
        };
        Ok(SubsystemView {
            kind,
            anchor: p.clone(),
            carrier,
            precondition_ok,
        })
    }
}

/// A centralizer- or normalizer-subsystem view: a carrier subgroup plus a
/// morphism membership test straight from the definition (existence of an
/// extension to `PQ` fixing the anchor appropriately).
pub struct SubsystemView {
    pub kind: LocalSubsystemKind,
    pub anchor: PermSet,
    pub carrier: PermSet,
    /// whether the anchor is fully centralized resp. normalized; when false
    /// the subsystem need not be saturated.
    pub precondition_ok: bool,
}

impl SubsystemView {
    /// Definition route: `phi: Q -> R` (inside the carrier) belongs when some
    /// extension `PQ -> PR` restricts to `phi` and restricts to the identity
    /// on the anchor (centralizer) or fixes it setwise (normalizer).
    pub fn contains_by_definition(
        &self,
        f: &FusionSystem,
        q: &PermSet,
        phi: &ConjMap,
    ) -> Result<bool> {
        let pq = self.anchor.extend_by(q.generators());
        let im = phi.image_set();
        let pr = self.anchor.extend_by(im.generators());
        Ok(f.hom_sets(&pq, &pr)?.iter().any(|ext| {
            let anchored = match self.kind {
                LocalSubsystemKind::Centralizer => ext.fixes_pointwise(&self.anchor),
                LocalSubsystemKind::Normalizer => ext.fixes_setwise(&self.anchor),
            };
            anchored && ext.restricts_to(phi)
        }))
    }

    /// Group route: the local subgroup (`C_G(P)` or `N_G(P)`) induces the
    /// subsystem; its hom set from `Q` to `R` by exhaustive conjugation.
    pub fn group_route_homset(
        &self,
        f: &FusionSystem,
        q: &PermSet,
        r: &PermSet,
    ) -> Result<Vec<ConjMap>> {
        let local: Vec<&Perm> = f
            .whole
            .elements()
            .iter()
            .filter(|g| match self.kind {
                LocalSubsystemKind::Centralizer => {
                    self.anchor.generators().iter().all(|s| s.conj(g) == *s)
                }
                LocalSubsystemKind::Normalizer => self
                    .anchor
                    .generators()
                    .iter()
                    .all(|s| self.anchor.contains(&s.conj(g))),
            })
            .collect();
        let mut maps: HashSet<ConjMap> = HashSet::new();
        for g in local {
            if q.generators().iter().all(|s| r.contains(&s.conj(g))) {
                maps.insert(ConjMap::from_conjugation(q, g));
            }
        }
        let mut maps: Vec<ConjMap> = maps.into_iter().collect();
        maps.sort_unstable();
        Ok(maps)
    }

    /// Definition-route hom set: fusion morphisms `Q -> R` passing the
    /// membership test.
    pub fn definition_route_homset(
        &self,
        f: &FusionSystem,
        q: &PermSet,
        r: &PermSet,
    ) -> Result<Vec<ConjMap>> {
        let mut out = Vec::new();
        for phi in f.hom_sets(q, r)? {
            if self.contains_by_definition(f, q, &phi)? {
                out.push(phi);
            }
        }
        Ok(out)
    }
}
