//! First cohomology over F2, extensions with elementary abelian kernel, and
//! the mod-4 lift obstruction.
//!
//! A 1-cocycle `d: G -> M` (right action) satisfies `d(gh) = d(g)h + d(h)`,
//! so it is determined by its values on generators. `Z^1` is computed by
//! propagating symbolic generator values along a Cayley spanning tree and
//! collecting the linear constraints from the remaining edges; `B^1` has
//! dimension `dim M - dim H^0`. This keeps the unknown count at
//! (generator count) * (module dimension) instead of |G| * dim.

mod extension;
mod higman;

pub use extension::{
    build_extension, complement_search, lemma32_conclusion_check, split_hyperplane_scenario,
    ExtElem, ExtensionGroup, ExtensionScenario, ExtensionSpec, Lemma32Verdict,
};
pub use higman::{find_fpf_a5_subgroup, higman_instance_check, no_mod4_lift};

use crate::gf2::{self, LinearSystem};
use crate::modrep::{MatF2, MatGroupF2};
use crate::{Error, Result};

/// A module action of an enumerated matrix group: one matrix per generator,
/// acting on row vectors of dimension `dim`.
#[derive(Clone, Debug)]
pub struct ModuleAction {
    pub dim: usize,
    pub mats: Vec<MatF2>,
}

impl ModuleAction {
    /// The natural action: each generator acts as itself.
    pub fn natural(g: &MatGroupF2) -> ModuleAction {
        ModuleAction {
            dim: g.dim(),
            mats: g.generators().to_vec(),
        }
    }

    /// The trivial action on `F2^dim`.
    pub fn trivial(g: &MatGroupF2, dim: usize) -> ModuleAction {
        ModuleAction {
            dim,
            mats: vec![MatF2::identity(dim); g.generators().len()],
        }
    }
}

/// Extend per-generator images to every element of `g` along its Cayley
/// graph, then certify multiplicativity on all (element, generator) pairs,
/// which is sufficient by induction on words. Returns images indexed like
/// `g.elements()`.
pub fn extend_action_to_elements(g: &MatGroupF2, action: &ModuleAction) -> Result<Vec<MatF2>> {
    if action.mats.len() != g.generators().len() {
        return Err(Error::Parse(
            "one action matrix per generator required".into(),
        ));
    }
    let id_idx = g.index_of(&g.identity()).expect("group contains identity");
    let mut rho: Vec<Option<MatF2>> = vec![None; g.order()];
    rho[id_idx] = Some(MatF2::identity(action.dim));
    let mut frontier = vec![id_idx];
    while let Some(i) = frontier.pop() {
        for (gen, mat) in g.generators().iter().zip(&action.mats) {
            let j = g.index_of(&g.elements()[i].mul(gen)).expect("closure");
            if rho[j].is_none() {
                rho[j] = Some(rho[i].unwrap().mul(mat));
                frontier.push(j);
            }
        }
    }
    let rho: Vec<MatF2> = rho
        .into_iter()
        .map(|m| m.expect("group is connected"))
        .collect();
    for (i, elem) in g.elements().iter().enumerate() {
        for (gen, mat) in g.generators().iter().zip(&action.mats) {
            let j = g.index_of(&elem.mul(gen)).expect("closure");
            if rho[j] != rho[i].mul(mat) {
                return Err(Error::Parse(
                    "action matrices do not define a homomorphism".into(),
                ));
            }
        }
    }
    Ok(rho)
}

/// A 1-cocycle, tabulated on all elements of the acting group (indexed like
/// `g.elements()`), with vector values packed in a byte.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cocycle1 {
    pub values: Vec<u8>,
}

impl Cocycle1 {
    /// The coboundary of the module vector `v`: `g -> v*g + v`.
    pub fn coboundary(g: &MatGroupF2, action: &ModuleAction, v: u8) -> Result<Cocycle1> {
        let rho = extend_action_to_elements(g, action)?;
        Ok(Cocycle1 {
            values: rho.iter().map(|m| m.apply(v) ^ v).collect(),
        })
    }

    /// Exhaustive check of the cocycle identity on all |G|^2 pairs.
    pub fn is_cocycle(&self, g: &MatGroupF2, action: &ModuleAction) -> Result<bool> {
        let rho = extend_action_to_elements(g, action)?;
        for (i, a) in g.elements().iter().enumerate() {
            for (j, b) in g.elements().iter().enumerate() {
                let k = g.index_of(&a.mul(b)).expect("closure");
                if self.values[k] != rho[j].apply(self.values[i]) ^ self.values[j] {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }
}

/// Dimensions of the first cohomology computation, with a basis of `Z^1`.
#[derive(Clone, Debug)]
pub struct H1 {
    pub dim_z1: usize,
    pub dim_b1: usize,
    pub dim_h0: usize,
    pub z1_basis: Vec<Cocycle1>,
}

impl H1 {
    pub fn dim_h1(&self) -> usize {
        self.dim_z1 - self.dim_b1
    }
}

/// Size guard: |G| * dim M in bits of unknown-expression storage.
const H1_BIT_BUDGET: usize = 1 << 24;

/// First cohomology of `g` on the module, by spanning-tree propagation.
pub fn first_cohomology(g: &MatGroupF2, action: &ModuleAction) -> Result<H1> {
    let m = action.dim;
    let k = g.generators().len();
    let unknowns = k * m;
    if g.order() * m * unknowns > H1_BIT_BUDGET {
        return Err(Error::TooLarge(format!(
            "H1 system for |G| = {} and dim = {m} exceeds the bit budget",
            g.order()
        )));
    }
    // validates that the action extends to a homomorphism
    extend_action_to_elements(g, action)?;

    // expr[e] = the value of a cocycle at element e, as a linear map from the
    // generator-value unknowns: one bit row per module coordinate.
    let id_idx = g.index_of(&g.identity()).expect("identity");
    let mut expr: Vec<Option<Vec<gf2::BitVec>>> = vec![None; g.order()];
    expr[id_idx] = Some(vec![gf2::bitvec_zero(unknowns); m]);
    let mut sys = LinearSystem::new(unknowns);
    let mut queue = std::collections::VecDeque::from([id_idx]);
    while let Some(i) = queue.pop_front() {
        for (s_slot, (s, mat)) in g.generators().iter().zip(&action.mats).enumerate() {
            let j = g.index_of(&g.elements()[i].mul(s)).expect("closure");
            // d(e*s) = d(e)*rho(s) + d(s)
            let src = expr[i].as_ref().unwrap();
            let mut rows = vec![gf2::bitvec_zero(unknowns); m];
            for (r, row) in rows.iter_mut().enumerate() {
                for (c, src_row) in src.iter().enumerate() {
                    if mat.get(c, r) {
                        gf2::bitvec_xor(row, src_row);
                    }
                }
                let idx = s_slot * m + r;
                let cur = gf2::bitvec_get(row, idx);
                gf2::bitvec_set(row, idx, !cur);
            }
            match &expr[j] {
                None => {
                    expr[j] = Some(rows);
                    queue.push_back(j);
                }
                Some(existing) => {
                    for (row, ex) in rows.iter().zip(existing) {
                        let mut diff = row.clone();
                        gf2::bitvec_xor(&mut diff, ex);
                        sys.add_equation(&diff, false);
                    }
                }
            }
        }
    }
    let dim_z1 = unknowns - sys.rank();

    // H^0: vectors fixed by every generator.
    let mut fixed = LinearSystem::new(m);
    for mat in &action.mats {
        for j in 0..m {
            let mut coeffs = gf2::bitvec_zero(m);
            for i in 0..m {
                let bit = mat.get(i, j) ^ (i == j);
                if bit {
                    gf2::bitvec_set(&mut coeffs, i, true);
                }
            }
            fixed.add_equation(&coeffs, false);
        }
    }
    let dim_h0 = fixed.nullity();
    let dim_b1 = m - dim_h0;

    let expr: Vec<Vec<gf2::BitVec>> = expr.into_iter().map(|e| e.unwrap()).collect();
    let z1_basis = sys
        .nullspace_basis()
        .into_iter()
        .map(|sol| {
            let values = expr
                .iter()
                .map(|rows| {
                    let mut v = 0u8;
                    for (r, row) in rows.iter().enumerate() {
                        let mut bit = false;
                        for (w, word) in row.iter().enumerate() {
                            bit ^= (word & sol[w]).count_ones() % 2 == 1;
                        }
                        if bit {
                            v |= 1 << r;
                        }
                    }
                    v
                })
                .collect();
            Cocycle1 { values }
        })
        .collect();

    Ok(H1 {
        dim_z1,
        dim_b1,
        dim_h0,
        z1_basis,
    })
}

/// Convenience wrapper returning just `dim H^1`.
pub fn h1_dimension(g: &MatGroupF2, action: &ModuleAction) -> Result<usize> {
    Ok(first_cohomology(g, action)?.dim_h1())
}
