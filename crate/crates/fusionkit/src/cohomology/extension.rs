//! Groups built from an elementary abelian normal subgroup `E = F2^dim`, an
//! acting quotient, and a normalized 2-cocycle.
//!
//! Elements are pairs `(q, e)` standing for `t(q) * e`, where `t` is the
//! normalized section of the quotient. The product rule is
//!
//! ```text
//! (q1, e1)(q2, e2) = (q1 q2, c(q1, q2) + e1 * rho(q2) + e2)
//! ```
//!
//! with `rho` the right action and `c` the 2-cocycle. The zero cocycle gives
//! the semidirect product, and then elements are never materialized, so the
//! split extensions of order above 10^6 used by the conclusion checker stay
//! cheap.

use std::collections::{BTreeMap, HashMap, HashSet};

use serde::{Deserialize, Serialize};

use crate::gf2::{self, LinearSystem};
use crate::modrep::{
    centralizer_in_gl, enumerate_group, is_transitive_on_nonzero, MatF2, MatGroupF2,
};
use crate::{Error, Result};

use super::{extend_action_to_elements, first_cohomology, ModuleAction};

/// An element `t(quot) * vec` of an extension group.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct ExtElem {
    pub quot: u32,
    pub vec: u8,
}

#[derive(Clone, Debug)]
pub struct ExtensionSpec {
    pub name: String,
    pub base_dim: usize,
    pub quotient: MatGroupF2,
    /// Action of each quotient generator on `E`.
    pub action_on_gens: Vec<MatF2>,
    /// Sparse normalized 2-cocycle on quotient element indices.
    pub cocycle: Vec<(u32, u32, u8)>,
}

#[derive(Clone, Debug)]
pub struct ExtensionGroup {
    name: String,
    dim: usize,
    quotient: MatGroupF2,
    action: Vec<MatF2>,
    cocycle: HashMap<(u32, u32), u8>,
    id_idx: u32,
}

/// Caps: quotient elements are materialized, extension elements are not.
const MAX_QUOTIENT: usize = 1 << 20;
const MAX_TOTAL: usize = 1 << 22;
/// Exhaustive triple validation of a nonzero cocycle is cubic.
const MAX_NONZERO_COCYCLE_QUOTIENT: usize = 256;

/// Build and validate an extension. The 2-cocycle identity is checked on all
/// triples for nonzero cocycles (the quotient is capped accordingly); the
/// zero cocycle satisfies the identity term by term. Non-normalized input is
/// first shifted by the coboundary of `q -> c(1, q)`.
pub fn build_extension(spec: ExtensionSpec) -> Result<ExtensionGroup> {
    let dim = spec.base_dim;
    if !(1..=8).contains(&dim) {
        return Err(Error::Parse(format!(
            "base dimension {dim} out of range 1..=8"
        )));
    }
    if spec.quotient.order() > MAX_QUOTIENT
        || spec.quotient.order().saturating_mul(1 << dim) > MAX_TOTAL
    {
        return Err(Error::TooLarge(format!(
            "extension of order {} * 2^{dim}",
            spec.quotient.order()
        )));
    }
    for m in &spec.action_on_gens {
        if m.dim() != dim {
            return Err(Error::Parse("action matrix dimension mismatch".into()));
        }
    }
    let action = extend_action_to_elements(
        &spec.quotient,
        &ModuleAction {
            dim,
            mats: spec.action_on_gens.clone(),
        },
    )?;
    let id_idx = spec
        .quotient
        .index_of(&spec.quotient.identity())
        .expect("identity present") as u32;

    let mask = if dim == 8 { 0xff } else { (1u8 << dim) - 1 };
    let mut cocycle: HashMap<(u32, u32), u8> = HashMap::new();
    for &(i, j, v) in &spec.cocycle {
        if i as usize >= spec.quotient.order() || j as usize >= spec.quotient.order() {
            return Err(Error::Parse("cocycle index out of range".into()));
        }
        if v & !mask != 0 {
            return Err(Error::Parse("cocycle value outside the module".into()));
        }
        if v != 0 {
            cocycle.insert((i, j), v);
        }
    }

    let needs_shift = cocycle.keys().any(|&(i, j)| i == id_idx || j == id_idx);
    if needs_shift {
        if spec.quotient.order() > MAX_NONZERO_COCYCLE_QUOTIENT {
            return Err(Error::NotACocycle(
                "non-normalized cocycle on a large quotient".into(),
            ));
        }
        // shift by the coboundary of b(q) = c(1, q)
        let b: Vec<u8> = (0..spec.quotient.order() as u32)
            .map(|q| cocycle.get(&(id_idx, q)).copied().unwrap_or(0))
            .collect();
        let n = spec.quotient.order() as u32;
        let mut shifted = HashMap::new();
        for q1 in 0..n {
            for q2 in 0..n {
                let prod = spec.quotient.elements()[q1 as usize]
                    .mul(&spec.quotient.elements()[q2 as usize]);
                let q12 = spec.quotient.index_of(&prod).expect("closure") as u32;
                let v = cocycle.get(&(q1, q2)).copied().unwrap_or(0)
                    ^ action[q2 as usize].apply(b[q1 as usize])
                    ^ b[q2 as usize]
                    ^ b[q12 as usize];
                if v != 0 {
                    shifted.insert((q1, q2), v);
                }
            }
        }
        cocycle = shifted;
    }

    let group = ExtensionGroup {
        name: spec.name,
        dim,
        quotient: spec.quotient,
        action,
        cocycle,
        id_idx,
    };

    if !group.cocycle.is_empty() {
        let n = group.quotient.order();
        if n > MAX_NONZERO_COCYCLE_QUOTIENT {
            return Err(Error::TooLarge(format!(
                "nonzero cocycle on a quotient of order {n} cannot be validated exhaustively"
            )));
        }
        for q1 in 0..n as u32 {
            if group.cval(id_idx, q1) != 0 || group.cval(q1, id_idx) != 0 {
                return Err(Error::NotACocycle(format!("not normalized at ({q1})")));
            }
            for q2 in 0..n as u32 {
                let q12 = group.qmul(q1, q2);
                for q3 in 0..n as u32 {
                    let q23 = group.qmul(q2, q3);
                    let lhs =
                        group.action[q3 as usize].apply(group.cval(q1, q2)) ^ group.cval(q12, q3);
                    let rhs = group.cval(q2, q3) ^ group.cval(q1, q23);
                    if lhs != rhs {
                        return Err(Error::NotACocycle(format!("({q1}, {q2}, {q3})")));
                    }
                }
            }
        }
    }
    Ok(group)
}

impl ExtensionGroup {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn base_dim(&self) -> usize {
        self.dim
    }

    pub fn quotient(&self) -> &MatGroupF2 {
        &self.quotient
    }

    pub fn action_of(&self, quot: u32) -> &MatF2 {
        &self.action[quot as usize]
    }

    pub fn order(&self) -> usize {
        self.quotient.order() << self.dim
    }

    pub fn identity(&self) -> ExtElem {
        ExtElem {
            quot: self.id_idx,
            vec: 0,
        }
    }

    pub fn embed_base(&self, vec: u8) -> ExtElem {
        ExtElem {
            quot: self.id_idx,
            vec,
        }
    }

    pub fn is_in_base(&self, e: ExtElem) -> bool {
        e.quot == self.id_idx
    }

    fn cval(&self, q1: u32, q2: u32) -> u8 {
        self.cocycle.get(&(q1, q2)).copied().unwrap_or(0)
    }

    fn qmul(&self, q1: u32, q2: u32) -> u32 {
        let prod =
            self.quotient.elements()[q1 as usize].mul(&self.quotient.elements()[q2 as usize]);
        self.quotient.index_of(&prod).expect("quotient closure") as u32
    }

    fn qinv(&self, q: u32) -> u32 {
        let inv = self.quotient.elements()[q as usize]
            .inverse()
            .expect("invertible");
        self.quotient.index_of(&inv).expect("quotient closure") as u32
    }

    pub fn mul(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        ExtElem {
            quot: self.qmul(a.quot, b.quot),
            vec: self.cval(a.quot, b.quot) ^ self.action[b.quot as usize].apply(a.vec) ^ b.vec,
        }
    }

    pub fn inv(&self, a: ExtElem) -> ExtElem {
        let qi = self.qinv(a.quot);
        ExtElem {
            quot: qi,
            vec: self.cval(a.quot, qi) ^ self.action[qi as usize].apply(a.vec),
        }
    }

    pub fn conj(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    pub fn comm(&self, a: ExtElem, b: ExtElem) -> ExtElem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn elem_order(&self, a: ExtElem) -> usize {
        let id = self.identity();
        let mut p = a;
        let mut o = 1;
        while p != id {
            p = self.mul(p, a);
            o += 1;
        }
        o
    }

    /// All elements over the given quotient indices.
    pub fn preimage_of(&self, quots: &[u32]) -> Vec<ExtElem> {
        let mut out = Vec::with_capacity(quots.len() << self.dim);
        for &q in quots {
            for v in 0..1u16 << self.dim {
                out.push(ExtElem {
                    quot: q,
                    vec: v as u8,
                });
            }
        }
        out.sort_unstable();
        out
    }

    /// Canonical lift of a quotient element.
    pub fn lift(&self, quot: u32) -> ExtElem {
        ExtElem { quot, vec: 0 }
    }
}

/// A complement to the base subgroup, found by solving the coboundary
/// equation `d(q1 q2) = c(q1, q2) + d(q1) rho(q2) + d(q2)` for generator
/// unknowns along a Cayley spanning tree. Returns `None` exactly when the
/// cocycle class is nonzero.
pub fn complement_search(h: &ExtensionGroup) -> Result<Option<Vec<ExtElem>>> {
    if h.order() > 1 << 20 {
        return Err(Error::TooLarge(format!(
            "complement search in order {}",
            h.order()
        )));
    }
    let g = &h.quotient;
    let m = h.dim;
    let k = g.generators().len();
    let unknowns = k * m;
    let id_idx = h.id_idx as usize;

    // affine expression per element: linear rows per coordinate plus constant
    let mut expr: Vec<Option<(Vec<gf2::BitVec>, u8)>> = vec![None; g.order()];
    expr[id_idx] = Some((vec![gf2::bitvec_zero(unknowns); m], 0));
    let mut sys = LinearSystem::new(unknowns);
    let mut queue = std::collections::VecDeque::from([id_idx]);
    while let Some(i) = queue.pop_front() {
        for (s_slot, s) in g.generators().iter().enumerate() {
            let s_idx = g.index_of(s).expect("generator in group") as u32;
            let j = g.index_of(&g.elements()[i].mul(s)).expect("closure");
            let (src_rows, src_const) = expr[i].as_ref().unwrap();
            let act = &h.action[s_idx as usize];
            let mut rows = vec![gf2::bitvec_zero(unknowns); m];
            for (r, row) in rows.iter_mut().enumerate() {
                for (c, src_row) in src_rows.iter().enumerate() {
                    if act.get(c, r) {
                        gf2::bitvec_xor(row, src_row);
                    }
                }
                let idx = s_slot * m + r;
                let cur = gf2::bitvec_get(row, idx);
                gf2::bitvec_set(row, idx, !cur);
            }
            let konst = act.apply(*src_const) ^ h.cval(i as u32, s_idx);
            match &expr[j] {
                None => {
                    expr[j] = Some((rows, konst));
                    queue.push_back(j);
                }
                Some((ex_rows, ex_const)) => {
                    for (r, row) in rows.iter().enumerate() {
                        let mut diff = row.clone();
                        gf2::bitvec_xor(&mut diff, &ex_rows[r]);
                        let rhs = (konst ^ ex_const) >> r & 1 == 1;
                        sys.add_equation(&diff, rhs);
                    }
                }
            }
        }
    }
    let Some(sol) = sys.solve() else {
        return Ok(None);
    };
    let mut complement = Vec::with_capacity(g.order());
    for (q, entry) in expr.iter().enumerate() {
        let (rows, konst) = entry.as_ref().unwrap();
        let mut v = *konst;
        for (r, row) in rows.iter().enumerate() {
            let mut bit = false;
            for (w, word) in row.iter().enumerate() {
                bit ^= (word & sol[w]).count_ones() % 2 == 1;
            }
            if bit {
                v ^= 1 << r;
            }
        }
        complement.push(ExtElem {
            quot: q as u32,
            vec: v,
        });
    }
    complement.sort_unstable();
    Ok(Some(complement))
}

/// Everything the conclusion checker establishes about one extension.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct Lemma32Verdict {
    /// assumption (a): the designated part acts transitively on `V^#`.
    pub assumption_transitive: bool,
    /// assumption (b): its commutant in `GL(V)` is contained in its image.
    pub assumption_commutant_inside: bool,
    /// assumption (c): `H^1` of the designated part on `V` vanishes.
    pub assumption_h1_zero: bool,
    pub x_order: usize,
    /// `X/V` is elementary abelian.
    pub xbar_elementary_abelian: bool,
    /// `[x, -]` induces a bijection `X/E -> V`.
    pub commutator_bijective: bool,
    /// that bijection intertwines the designated action.
    pub commutator_equivariant: bool,
    pub complement_found: bool,
    pub y_order: usize,
    pub y_elementary_abelian: bool,
    pub y_homocyclic_exponent4_omega1_v: bool,
}

fn span_reduce(basis: &[u8], mut v: u8) -> u8 {
    for &b in basis {
        let pivot = 7 - b.leading_zeros();
        if v >> pivot & 1 == 1 {
            v ^= b;
        }
    }
    v
}

fn echelonize(vectors: &[u8]) -> Vec<u8> {
    let mut basis: Vec<u8> = Vec::new();
    for &v in vectors {
        let r = span_reduce(&basis, v);
        if r != 0 {
            basis.push(r);
            basis.sort_unstable_by_key(|b| std::cmp::Reverse(*b));
        }
    }
    basis
}

/// Check the complement conclusion for an extension shaped like
/// `E = <x> F` normal with quotient `U * G`: `X` is the preimage of `U`,
/// and a designated-part-invariant complement `Y` to `<x>` in `X` that is
/// elementary abelian (or homocyclic with `Omega_1(Y) = V`) of order
/// `2^(2 dim V)` is searched for among the hyperplane preimages of `X/V`.
pub fn lemma32_conclusion_check(
    h: &ExtensionGroup,
    x_vec: u8,
    f_basis: &[u8],
    g_part: &MatGroupF2,
) -> Result<Lemma32Verdict> {
    let dim = h.base_dim();
    let v_basis = echelonize(f_basis);
    if v_basis.len() != f_basis.len() || v_basis.len() + 1 != dim {
        return Err(Error::ShapeMismatch(format!(
            "F must be a hyperplane basis of E (got rank {} in dimension {dim})",
            v_basis.len()
        )));
    }
    if x_vec == 0 || span_reduce(&v_basis, x_vec) == 0 {
        return Err(Error::ShapeMismatch("x must lie in E - F".into()));
    }
    let in_v = |v: u8| span_reduce(&v_basis, v) == 0;
    let quotient_order = h.quotient().order() as u32;

    // V must be invariant under the whole quotient action
    for q in 0..quotient_order {
        for &b in &v_basis {
            if !in_v(h.action_of(q).apply(b)) {
                return Err(Error::ShapeMismatch(
                    "F is not invariant under the action".into(),
                ));
            }
        }
    }

    // U: trivial on V and x -> x + V
    let u_part: Vec<u32> = (0..quotient_order)
        .filter(|&q| {
            let act = h.action_of(q);
            v_basis.iter().all(|&b| act.apply(b) == b) && in_v(act.apply(x_vec) ^ x_vec)
        })
        .collect();
    let v_order = 1usize << v_basis.len();
    if u_part.len() != v_order {
        return Err(Error::ShapeMismatch(format!(
            "|U| = {} but |F| = {v_order}",
            u_part.len()
        )));
    }
    let u_set: HashSet<u32> = u_part.iter().copied().collect();
    for &a in &u_part {
        for &b in &u_part {
            if !u_set.contains(&h.qmul(a, b)) {
                return Err(Error::ShapeMismatch("U is not closed".into()));
            }
        }
    }
    for &a in &u_part {
        for q in 0..quotient_order {
            if !u_set.contains(&h.qmul(h.qmul(h.qinv(q), a), q)) {
                return Err(Error::ShapeMismatch(
                    "U is not normal in the quotient".into(),
                ));
            }
        }
    }

    // G part: inside the quotient, trivial intersection with U, complement by
    // counting, and fixing x.
    let g_indices: Vec<u32> = g_part
        .elements()
        .iter()
        .map(|m| {
            h.quotient()
                .index_of(m)
                .map(|i| i as u32)
                .ok_or_else(|| Error::ShapeMismatch("G part not inside the quotient".into()))
        })
        .collect::<Result<_>>()?;
    if g_indices.iter().filter(|&&q| u_set.contains(&q)).count() != 1 {
        return Err(Error::ShapeMismatch(
            "U and G must intersect trivially".into(),
        ));
    }
    if u_part.len() * g_indices.len() != quotient_order as usize {
        return Err(Error::ShapeMismatch(
            "quotient is not U * G by counting".into(),
        ));
    }
    for &q in &g_indices {
        if h.action_of(q).apply(x_vec) != x_vec {
            return Err(Error::ShapeMismatch("G part must fix x".into()));
        }
    }

    // assumptions (a)-(c) on the restricted module V
    let restrict = |q: u32| -> MatF2 {
        let mut m = MatF2::zero(v_basis.len());
        for (i, &b) in v_basis.iter().enumerate() {
            let img = h.action_of(q).apply(b);
            // coordinates of img in the echelon basis
            let mut rem = img;
            for (j, &c) in v_basis.iter().enumerate() {
                let pivot = 7 - c.leading_zeros();
                if rem >> pivot & 1 == 1 {
                    rem ^= c;
                    m.set(i, j, true);
                }
            }
            debug_assert_eq!(rem, 0);
        }
        m
    };
    let restricted_gens: Vec<MatF2> = g_part
        .generators()
        .iter()
        .map(|mat| restrict(h.quotient().index_of(mat).expect("checked") as u32))
        .collect();
    let restricted = enumerate_group("G|V", &restricted_gens)?;
    let assumption_transitive = is_transitive_on_nonzero(&restricted);
    let assumption_commutant_inside = centralizer_in_gl(&restricted)
        .elements()
        .iter()
        .all(|m| restricted.contains(m));
    let assumption_h1_zero =
        first_cohomology(&restricted, &ModuleAction::natural(&restricted))?.dim_h1() == 0;

    // X = preimage of U
    let x_elems = h.preimage_of(&u_part);
    let x_order = x_elems.len();
    let x_elem = h.embed_base(x_vec);

    // X/V: key every element by (quot, vec mod V)
    let key = |e: ExtElem| -> (u32, u8) { (e.quot, span_reduce(&v_basis, e.vec)) };
    let xbar: Vec<(u32, u8)> = {
        let mut keys: Vec<(u32, u8)> = x_elems.iter().map(|&e| key(e)).collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    };
    let lift_key = |k: (u32, u8)| ExtElem {
        quot: k.0,
        vec: k.1,
    };
    let xbar_elementary_abelian = xbar.iter().all(|&a| {
        let ea = lift_key(a);
        key(h.mul(ea, ea)) == key(h.identity())
            && xbar.iter().all(|&b| {
                let eb = lift_key(b);
                key(h.mul(ea, eb)) == key(h.mul(eb, ea))
            })
    });

    // the commutator map [x, -]: X/E -> V
    let mut kappa: BTreeMap<u32, u8> = BTreeMap::new();
    let mut commutator_bijective = true;
    for &xi in &x_elems {
        let c = h.comm(x_elem, xi);
        if !h.is_in_base(c) || !in_v(c.vec) {
            commutator_bijective = false;
            break;
        }
        match kappa.entry(xi.quot) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c.vec);
            }
            std::collections::btree_map::Entry::Occupied(e) => {
                if *e.get() != c.vec {
                    commutator_bijective = false; // not constant mod E
                    break;
                }
            }
        }
    }
    if commutator_bijective {
        let values: HashSet<u8> = kappa.values().copied().collect();
        commutator_bijective = values.len() == v_order && kappa.len() == u_part.len();
    }
    let mut commutator_equivariant = commutator_bijective;
    if commutator_equivariant {
        'outer: for &q in &u_part {
            for gmat in g_part.generators() {
                let gq = h.quotient().index_of(gmat).expect("checked") as u32;
                let tg = h.lift(gq);
                let xi_conj = h.conj(h.lift(q), tg);
                let lhs = h.comm(x_elem, xi_conj);
                let rhs = h.conj(h.comm(x_elem, h.lift(q)), tg);
                if lhs != rhs {
                    commutator_equivariant = false;
                    break 'outer;
                }
            }
        }
    }

    // coordinates on X/V
    let xbar_basis: Vec<(u32, u8)> = {
        let mut basis: Vec<(u32, u8)> = Vec::new();
        let mut span: HashSet<(u32, u8)> = [key(h.identity())].into();
        for &k in &xbar {
            if !span.contains(&k) {
                basis.push(k);
                let mut next = span.clone();
                for &s in &span {
                    next.insert(key(h.mul(lift_key(s), lift_key(k))));
                }
                span = next;
            }
        }
        basis
    };
    let coords: HashMap<(u32, u8), u8> = {
        let mut map: HashMap<(u32, u8), u8> = [(key(h.identity()), 0u8)].into();
        let mut frontier = vec![key(h.identity())];
        while let Some(k) = frontier.pop() {
            let kc = map[&k];
            for (b, &bk) in xbar_basis.iter().enumerate() {
                let nk = key(h.mul(lift_key(k), lift_key(bk)));
                let nc = kc ^ (1 << b);
                if let std::collections::hash_map::Entry::Vacant(e) = map.entry(nk) {
                    e.insert(nc);
                    frontier.push(nk);
                }
            }
        }
        map
    };

    // hyperplane complements to <x-bar>, invariant under the designated part
    let xbar_key = key(x_elem);
    let g_lifts: Vec<ExtElem> = g_part
        .generators()
        .iter()
        .map(|m| h.lift(h.quotient().index_of(m).expect("checked") as u32))
        .collect();
    let mut found_y: Option<Vec<ExtElem>> = None;
    if xbar_elementary_abelian && coords.len() == xbar.len() {
        let nbar = xbar_basis.len();
        'functional: for phi in 1u16..1 << nbar {
            let phi = phi as u8;
            if (coords[&xbar_key] & phi).count_ones().is_multiple_of(2) {
                continue; // x-bar must be outside the hyperplane
            }
            let w: Vec<(u32, u8)> = xbar
                .iter()
                .copied()
                .filter(|k| (coords[k] & phi).count_ones().is_multiple_of(2))
                .collect();
            for &k in &w {
                for tg in &g_lifts {
                    let c = key(h.conj(lift_key(k), *tg));
                    if !(coords[&c] & phi).count_ones().is_multiple_of(2) {
                        continue 'functional;
                    }
                }
            }
            let wset: HashSet<(u32, u8)> = w.iter().copied().collect();
            let y: Vec<ExtElem> = x_elems
                .iter()
                .copied()
                .filter(|&e| wset.contains(&key(e)))
                .collect();
            found_y = Some(y);
            break;
        }
    }

    let (complement_found, y_order, y_elementary_abelian, y_homocyclic) = match &found_y {
        None => (false, 0, false, false),
        Some(y) => {
            let yset: HashSet<ExtElem> = y.iter().copied().collect();
            let invariant = y
                .iter()
                .all(|&e| g_lifts.iter().all(|tg| yset.contains(&h.conj(e, *tg))));
            let abelian = y
                .iter()
                .all(|&a| y.iter().all(|&b| h.mul(a, b) == h.mul(b, a)));
            let id = h.identity();
            let involution_or_id: Vec<ExtElem> =
                y.iter().copied().filter(|&e| h.mul(e, e) == id).collect();
            let elementary = abelian && involution_or_id.len() == y.len();
            let exponent4 = abelian
                && !elementary
                && y.iter().all(|&e| {
                    let sq = h.mul(e, e);
                    h.mul(sq, sq) == id
                });
            // Omega_1(Y) = V exactly
            let omega_is_v = involution_or_id.len() == v_order
                && involution_or_id
                    .iter()
                    .all(|&e| h.is_in_base(e) && in_v(e.vec));
            (invariant, y.len(), elementary, exponent4 && omega_is_v)
        }
    };

    Ok(Lemma32Verdict {
        assumption_transitive,
        assumption_commutant_inside,
        assumption_h1_zero,
        x_order,
        xbar_elementary_abelian,
        commutator_bijective,
        commutator_equivariant,
        complement_found,
        y_order,
        y_elementary_abelian,
        y_homocyclic_exponent4_omega1_v: y_homocyclic,
    })
}

/// Build the split hyperplane-stabilizer scenario over a subgroup `G` of
/// `GL_n(2)`: the module is `E = F2^(n+1)` with `V` the first `n`
/// coordinates and `x = e_n` the fixed vector; the quotient is `U * G`
/// inside `GL_{n+1}(2)`, where `U` is the group of transvections
/// `x -> x + c` (`c` in `V`) and `G` sits block-diagonally; the cocycle is
/// zero. Returns the extension, `x`, the basis of `V`, and the embedded `G`.
pub fn split_hyperplane_scenario(
    g_on_v: &MatGroupF2,
) -> Result<(ExtensionGroup, u8, Vec<u8>, MatGroupF2)> {
    let n = g_on_v.dim();
    if n >= 8 {
        return Err(Error::TooLarge(
            "hyperplane scenario needs dimension below 8".into(),
        ));
    }
    let embed = |a: &MatF2| -> MatF2 {
        let mut m = MatF2::zero(n + 1);
        for i in 0..n {
            for j in 0..n {
                m.set(i, j, a.get(i, j));
            }
        }
        m.set(n, n, true);
        m
    };
    let mut qgens: Vec<MatF2> = g_on_v.generators().iter().map(&embed).collect();
    for c in 0..n {
        let mut t = MatF2::identity(n + 1);
        t.set(n, c, true);
        qgens.push(t);
    }
    let quotient = enumerate_group(&format!("U.{}", g_on_v.name()), &qgens)?;
    let g_part = enumerate_group(
        g_on_v.name(),
        &g_on_v.generators().iter().map(&embed).collect::<Vec<_>>(),
    )?;
    let action_on_gens = qgens.clone();
    let h = build_extension(ExtensionSpec {
        name: format!("E:{}", quotient.name()),
        base_dim: n + 1,
        quotient,
        action_on_gens,
        cocycle: Vec::new(),
    })?;
    let x_vec = 1u8 << n;
    let f_basis: Vec<u8> = (0..n).map(|i| 1u8 << i).collect();
    Ok((h, x_vec, f_basis, g_part))
}

// ---------------------------------------------------------------------------
// JSON interchange

#[derive(Serialize, Deserialize)]
struct RawExtensionSpec {
    name: String,
    base_dim: usize,
    quotient_dim: usize,
    /// One matrix per string: rows packed as two hex digits each.
    quotient_generators: Vec<String>,
    action_generators: Vec<String>,
    #[serde(default)]
    cocycle: Vec<(u32, u32, u8)>,
    /// designated elements
    #[serde(default)]
    x: Option<u8>,
    #[serde(default)]
    f_basis: Vec<u8>,
}

fn mat_from_hex(dim: usize, text: &str) -> Result<MatF2> {
    if text.len() != 2 * dim {
        return Err(Error::Parse(format!(
            "matrix {text:?} should have {} hex digits",
            2 * dim
        )));
    }
    let mut rows = Vec::with_capacity(dim);
    for i in 0..dim {
        rows.push(
            u8::from_str_radix(&text[2 * i..2 * i + 2], 16)
                .map_err(|_| Error::Parse(format!("bad hex in {text:?}")))?,
        );
    }
    Ok(MatF2::from_rows(&rows))
}

fn mat_to_hex(dim: usize, m: &MatF2) -> String {
    (0..dim).map(|i| format!("{:02x}", m.row(i))).collect()
}

/// The designated data of a checker scenario: the extension plus `x` and the
/// basis of `F`.
pub struct ExtensionScenario {
    pub spec: ExtensionSpec,
    pub x: u8,
    pub f_basis: Vec<u8>,
}

impl ExtensionScenario {
    pub fn from_json(text: &str) -> Result<ExtensionScenario> {
        let raw: RawExtensionSpec =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let qgens: Vec<MatF2> = raw
            .quotient_generators
            .iter()
            .map(|t| mat_from_hex(raw.quotient_dim, t))
            .collect::<Result<_>>()?;
        let agens: Vec<MatF2> = raw
            .action_generators
            .iter()
            .map(|t| mat_from_hex(raw.base_dim, t))
            .collect::<Result<_>>()?;
        let quotient = enumerate_group(&raw.name, &qgens)?;
        Ok(ExtensionScenario {
            spec: ExtensionSpec {
                name: raw.name,
                base_dim: raw.base_dim,
                quotient,
                action_on_gens: agens,
                cocycle: raw.cocycle,
            },
            x: raw.x.unwrap_or(0),
            f_basis: raw.f_basis,
        })
    }

    pub fn to_json(&self) -> String {
        let raw = RawExtensionSpec {
            name: self.spec.name.clone(),
            base_dim: self.spec.base_dim,
            quotient_dim: self.spec.quotient.dim(),
            quotient_generators: self
                .spec
                .quotient
                .generators()
                .iter()
                .map(|m| mat_to_hex(self.spec.quotient.dim(), m))
                .collect(),
            action_generators: self
                .spec
                .action_on_gens
                .iter()
                .map(|m| mat_to_hex(self.spec.base_dim, m))
                .collect(),
            cocycle: self.spec.cocycle.clone(),
            x: Some(self.x),
            f_basis: self.f_basis.clone(),
        };
        serde_json::to_string_pretty(&raw).expect("spec serializes")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::{build_gl24_in_gl42, enumerate_group};

    fn c2_matrices() -> MatGroupF2 {
        enumerate_group("C2", &[MatF2::from_rows(&[0b10, 0b01])]).unwrap()
    }

    fn gl22() -> MatGroupF2 {
        // the two transvections [[1,1],[0,1]] and [[1,0],[1,1]]
        let gens = [
            MatF2::from_rows(&[0b11, 0b10]),
            MatF2::from_rows(&[0b01, 0b11]),
        ];
        enumerate_group("GL2(2)", &gens).unwrap()
    }

    fn trivial_action(q: &MatGroupF2, dim: usize) -> Vec<MatF2> {
        vec![MatF2::identity(dim); q.generators().len()]
    }

    #[test]
    fn nonsplit_extension_of_c2_by_c2_is_c4() {
        let quotient = c2_matrices();
        let swap_idx = quotient.index_of(&MatF2::from_rows(&[0b10, 0b01])).unwrap() as u32;
        let spec = ExtensionSpec {
            name: "C4".into(),
            base_dim: 1,
            action_on_gens: trivial_action(&quotient, 1),
            quotient,
            cocycle: vec![(swap_idx, swap_idx, 1)],
        };
        let h = build_extension(spec).unwrap();
        assert_eq!(h.order(), 4);
        let g = ExtElem {
            quot: swap_idx,
            vec: 0,
        };
        assert_eq!(h.elem_order(g), 4);
        assert_eq!(complement_search(&h).unwrap(), None);
    }

    #[test]
    fn zero_cocycle_gives_the_semidirect_product() {
        let quotient = gl22();
        let spec = ExtensionSpec {
            name: "S4".into(),
            base_dim: 2,
            action_on_gens: quotient.generators().to_vec(),
            quotient,
            cocycle: Vec::new(),
        };
        let h = build_extension(spec).unwrap();
        assert_eq!(h.order(), 24);
        // S4 fingerprint: 9 involutions, 8 elements of order 3, 6 of order 4
        let mut counts = std::collections::BTreeMap::new();
        for q in 0..h.quotient().order() as u32 {
            for v in 0..4u8 {
                let e = ExtElem { quot: q, vec: v };
                *counts.entry(h.elem_order(e)).or_insert(0usize) += 1;
            }
        }
        assert_eq!(counts.get(&2), Some(&9));
        assert_eq!(counts.get(&3), Some(&8));
        assert_eq!(counts.get(&4), Some(&6));
        // split by construction: the canonical lifted complement comes back
        let comp = complement_search(&h).unwrap().expect("splits");
        assert_eq!(comp.len(), 6);
        assert_eq!(comp.iter().filter(|e| h.is_in_base(**e)).count(), 1);
    }

    #[test]
    fn coboundary_twist_still_splits_and_matches_the_subgroup_oracle() {
        let quotient = gl22();
        let n = quotient.order() as u32;
        // cocycle = coboundary of an arbitrary 1-cochain b
        let b = |q: u32| -> u8 { (q as u8).wrapping_mul(5) & 0b11 };
        let mut cocycle = Vec::new();
        let action = extend_action_to_elements(
            &quotient,
            &ModuleAction {
                dim: 2,
                mats: quotient.generators().to_vec(),
            },
        )
        .unwrap();
        for q1 in 0..n {
            for q2 in 0..n {
                let prod = quotient.elements()[q1 as usize].mul(&quotient.elements()[q2 as usize]);
                let q12 = quotient.index_of(&prod).unwrap() as u32;
                let v = action[q2 as usize].apply(b(q1)) ^ b(q2) ^ b(q12);
                if v != 0 {
                    cocycle.push((q1, q2, v));
                }
            }
        }
        let spec = ExtensionSpec {
            name: "S4-twisted".into(),
            base_dim: 2,
            action_on_gens: quotient.generators().to_vec(),
            quotient,
            cocycle,
        };
        let h = build_extension(spec).unwrap();
        let comp = complement_search(&h).unwrap().expect("coboundaries split");
        // the returned section really is a complement subgroup
        let comp_set: std::collections::HashSet<ExtElem> = comp.iter().copied().collect();
        for &a in &comp {
            for &b2 in &comp {
                assert!(comp_set.contains(&h.mul(a, b2)));
            }
        }
        assert_eq!(comp.iter().filter(|e| h.is_in_base(**e)).count(), 1);

        // oracle: exhaustive subgroup search finds the same complement count,
        // and all complements are conjugate under the base (H^1 = 0)
        let all: Vec<ExtElem> =
            h.preimage_of(&(0..h.quotient().order() as u32).collect::<Vec<_>>());
        let mut complements = std::collections::HashSet::new();
        for &a in &all {
            for &b2 in &all {
                let mut sub: std::collections::HashSet<ExtElem> = [h.identity()].into();
                let mut frontier = vec![h.identity()];
                let mut ok = true;
                while let Some(x) = frontier.pop() {
                    for s in [a, b2] {
                        let p = h.mul(x, s);
                        if sub.insert(p) {
                            if sub.len() > 6 {
                                ok = false;
                                break;
                            }
                            frontier.push(p);
                        }
                    }
                    if !ok {
                        break;
                    }
                }
                if ok && sub.len() == 6 && sub.iter().filter(|e| h.is_in_base(**e)).count() == 1 {
                    let mut sorted: Vec<ExtElem> = sub.into_iter().collect();
                    sorted.sort_unstable();
                    complements.insert(sorted);
                }
            }
        }
        assert!(complements.contains(&comp));
        // base-conjugation orbits on the complements: exactly one (H^1 = 0)
        let base: Vec<ExtElem> = (0..4u8).map(|v| h.embed_base(v)).collect();
        let canon = |set: &Vec<ExtElem>| set.clone();
        let mut orbits: Vec<Vec<Vec<ExtElem>>> = Vec::new();
        let mut assigned: std::collections::HashSet<Vec<ExtElem>> = Default::default();
        for c in &complements {
            if assigned.contains(c) {
                continue;
            }
            let mut orbit = Vec::new();
            for e in &base {
                let mut img: Vec<ExtElem> = c.iter().map(|&y| h.conj(y, *e)).collect();
                img.sort_unstable();
                if assigned.insert(img.clone()) {
                    orbit.push(canon(&img));
                }
            }
            orbits.push(orbit);
        }
        assert_eq!(orbits.len(), 1);
    }

    #[test]
    fn small_hyperplane_scenario_passes_the_conclusion_check() {
        let (h, x, f_basis, g_part) = split_hyperplane_scenario(&gl22()).unwrap();
        assert_eq!(h.order(), 8 * 4 * 6);
        let verdict = lemma32_conclusion_check(&h, x, &f_basis, &g_part).unwrap();
        assert!(verdict.assumption_transitive);
        assert!(verdict.assumption_commutant_inside);
        assert!(verdict.assumption_h1_zero);
        assert_eq!(verdict.x_order, 32);
        assert!(verdict.xbar_elementary_abelian);
        assert!(verdict.commutator_bijective);
        assert!(verdict.commutator_equivariant);
        assert!(verdict.complement_found);
        assert_eq!(verdict.y_order, 16);
        assert!(verdict.y_elementary_abelian);
        assert!(!verdict.y_homocyclic_exponent4_omega1_v);
    }

    #[test]
    fn gl24_hyperplane_scenario() {
        let (h, x, f_basis, g_part) = split_hyperplane_scenario(&build_gl24_in_gl42()).unwrap();
        assert_eq!(h.order(), 32 * 16 * 180);
        let verdict = lemma32_conclusion_check(&h, x, &f_basis, &g_part).unwrap();
        assert!(verdict.assumption_transitive && verdict.assumption_h1_zero);
        assert_eq!(verdict.x_order, 512);
        assert!(verdict.complement_found);
        assert_eq!(verdict.y_order, 256);
        assert!(verdict.y_elementary_abelian);
    }

    #[test]
    fn shape_mismatch_is_reported() {
        let (h, _x, f_basis, g_part) = split_hyperplane_scenario(&gl22()).unwrap();
        // designating x inside F violates the shape
        let err = lemma32_conclusion_check(&h, f_basis[0], &f_basis, &g_part);
        assert!(matches!(err, Err(Error::ShapeMismatch(_))));
    }

    #[test]
    fn scenario_json_round_trip() {
        let (h, x, f_basis, _g) = split_hyperplane_scenario(&gl22()).unwrap();
        let scenario = ExtensionScenario {
            spec: ExtensionSpec {
                name: h.name().to_string(),
                base_dim: h.base_dim(),
                quotient: h.quotient().clone(),
                action_on_gens: h.quotient().generators().to_vec(),
                cocycle: Vec::new(),
            },
            x,
            f_basis,
        };
        let text = scenario.to_json();
        let back = ExtensionScenario::from_json(&text).unwrap();
        assert_eq!(back.spec.base_dim, scenario.spec.base_dim);
        assert_eq!(back.x, scenario.x);
        assert_eq!(back.f_basis, scenario.f_basis);
        assert_eq!(back.spec.quotient.order(), scenario.spec.quotient.order());
        let rebuilt = build_extension(back.spec).unwrap();
        assert_eq!(rebuilt.order(), h.order());
    }
}
