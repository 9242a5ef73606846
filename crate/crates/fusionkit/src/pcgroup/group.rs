//! Construction of the group presented by a `PcPresentation`, one cyclic
//! extension per generator, with every extension certified before it is used.
//!
//! At stage `k` the group `G_k = <g_0, ..., g_{k-1}>` is already built with a
//! verified multiplication. Adding `g_k` requires the conjugation map
//! `u -> u^{g_k}` (read off the commutator relations) to extend to an
//! automorphism `c` of `G_k` with `c(w) = w` and `c^2 = conjugation by w`,
//! where `w = g_k^2`. Those three conditions are checked exhaustively; if any
//! fails the presented group collapses below `2^n` normal forms and the
//! presentation is reported as inconsistent. If they hold, the extension is a
//! group of order `2^{k+1}` and, by von Dyck, isomorphic to the presented
//! group once all stages pass.

use crate::{Error, Result};

use super::presentation::{PcPresentation, Word};

/// An element in normal form: bit `i` is the exponent of generator `i`.
#[derive(Copy, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct PcElem(pub u16);

impl PcElem {
    pub const IDENTITY: PcElem = PcElem(0);

    pub fn exponent(self, i: usize) -> bool {
        self.0 >> i & 1 == 1
    }
}

/// A finite 2-group with certified normal-form multiplication.
#[derive(Clone, Debug)]
pub struct PcGroup {
    pres: PcPresentation,
    n: usize,
    /// `rmul[i][u]` is `u * g_i`.
    rmul: Vec<Vec<u16>>,
    inv: Vec<u16>,
}

/// Right-multiplication tables for the partial group `G_k`; `tables[i]` has
/// size `2^k` throughout stage `k`.
struct Stage {
    k: usize,
    tables: Vec<Vec<u16>>,
}

impl Stage {
    fn mul(&self, a: u16, b: u16) -> u16 {
        let mut acc = a;
        let mut rest = b;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc = self.tables[i][acc as usize];
        }
        acc
    }

    fn inv(&self, a: u16) -> u16 {
        let mut prev = 0u16;
        let mut p = a;
        while p != 0 {
            prev = p;
            p = self.mul(p, a);
        }
        prev
    }

    fn eval(&self, word: &Word) -> u16 {
        word.iter().fold(0u16, |acc, &l| self.mul(acc, 1 << l))
    }
}

pub(super) fn build(pres: PcPresentation) -> Result<PcGroup> {
    let n = pres.generator_count();
    let mut stage = Stage {
        k: 0,
        tables: Vec::new(),
    };
    for k in 0..n {
        extend(&mut stage, &pres, k)?;
    }
    let order = 1usize << n;
    let mut inv = vec![0u16; order];
    for (u, slot) in inv.iter_mut().enumerate() {
        *slot = stage.inv(u as u16);
    }
    Ok(PcGroup {
        pres,
        n,
        rmul: stage.tables,
        inv,
    })
}

fn extend(stage: &mut Stage, pres: &PcPresentation, k: usize) -> Result<()> {
    let size = 1usize << stage.k;
    let gname = &pres.names()[k];
    let sq = stage.eval(pres.power_word(k));

    // conjugation by g_k on the generators of G_k: g_i^{g_k} = g_i [g_i, g_k]
    // and [g_i, g_k] = [g_k, g_i]^{-1} from the relation table.
    let mut conj_gen = vec![0u16; stage.k];
    for (i, cg) in conj_gen.iter_mut().enumerate() {
        let w = stage.eval(pres.commutator_word(k, i));
        *cg = stage.mul(1 << i, stage.inv(w));
    }

    // extend multiplicatively to all normal forms, then certify
    let mut conj = vec![0u16; size];
    for (u, c) in conj.iter_mut().enumerate() {
        let mut acc = 0u16;
        for (i, cg) in conj_gen.iter().enumerate() {
            if u >> i & 1 == 1 {
                acc = stage.mul(acc, *cg);
            }
        }
        *c = acc;
    }

    for u in 0..size as u16 {
        for (i, cg) in conj_gen.iter().enumerate() {
            let lhs = conj[stage.mul(u, 1 << i) as usize];
            let rhs = stage.mul(conj[u as usize], *cg);
            if lhs != rhs {
                return Err(Error::InconsistentPresentation(format!(
                    "conjugation by {gname} is not a homomorphism of the subgroup below it"
                )));
            }
        }
    }
    let mut seen = vec![false; size];
    for &v in &conj {
        if std::mem::replace(&mut seen[v as usize], true) {
            return Err(Error::InconsistentPresentation(format!(
                "conjugation by {gname} is not injective on the subgroup below it"
            )));
        }
    }
    if conj[sq as usize] != sq {
        return Err(Error::InconsistentPresentation(format!(
            "conjugation by {gname} moves {gname}^2"
        )));
    }
    let sq_inv = stage.inv(sq);
    for u in 0..size as u16 {
        let twice = conj[conj[u as usize] as usize];
        let by_sq = stage.mul(stage.mul(sq_inv, u), sq);
        if twice != by_sq {
            return Err(Error::InconsistentPresentation(format!(
                "square of conjugation by {gname} is not conjugation by {gname}^2"
            )));
        }
    }

    let mut conj_inv = vec![0u16; size];
    for (u, &v) in conj.iter().enumerate() {
        conj_inv[v as usize] = u as u16;
    }

    // grow the right-multiplication tables to the extension of order 2^{k+1}
    let bit = 1u16 << stage.k;
    let mut tables = Vec::with_capacity(stage.k + 1);
    for (i, old) in stage.tables.iter().enumerate() {
        let mut table = vec![0u16; size * 2];
        table[..size].copy_from_slice(old);
        for a0 in 0..size as u16 {
            // (a0 * g_k) * g_i = a0 * (g_k g_i g_k^{-1}) * g_k
            table[(a0 | bit) as usize] = stage.mul(a0, conj_inv[1 << i]) | bit;
        }
        tables.push(table);
    }
    let mut top = vec![0u16; size * 2];
    for a0 in 0..size as u16 {
        top[a0 as usize] = a0 | bit;
        top[(a0 | bit) as usize] = stage.mul(a0, sq);
    }
    tables.push(top);
    stage.tables = tables;
    stage.k += 1;
    Ok(())
}

impl PcGroup {
    /// Build the group presented by `pres`, certifying consistency.
    pub fn from_presentation(pres: PcPresentation) -> Result<Self> {
        build(pres)
    }

    pub fn from_json(text: &str) -> Result<Self> {
        build(PcPresentation::from_json(text)?)
    }

    pub fn presentation(&self) -> &PcPresentation {
        &self.pres
    }

    pub fn generator_count(&self) -> usize {
        self.n
    }

    pub fn order(&self) -> usize {
        1 << self.n
    }

    pub fn generator(&self, i: usize) -> PcElem {
        PcElem(1 << i)
    }

    pub fn generator_named(&self, name: &str) -> Result<PcElem> {
        Ok(PcElem(1 << self.pres.index_of(name)?))
    }

    pub fn elements(&self) -> impl Iterator<Item = PcElem> {
        (0..1u32 << self.n).map(|u| PcElem(u as u16))
    }

    pub fn mul(&self, a: PcElem, b: PcElem) -> PcElem {
        let mut acc = a.0;
        let mut rest = b.0;
        while rest != 0 {
            let i = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            acc = self.rmul[i][acc as usize];
        }
        PcElem(acc)
    }

    pub fn inv(&self, a: PcElem) -> PcElem {
        PcElem(self.inv[a.0 as usize])
    }

    /// `b^{-1} a b`
    pub fn conj(&self, a: PcElem, b: PcElem) -> PcElem {
        self.mul(self.mul(self.inv(b), a), b)
    }

    /// `[a, b] = a^{-1} b^{-1} a b`
    pub fn comm(&self, a: PcElem, b: PcElem) -> PcElem {
        self.mul(self.mul(self.inv(a), self.inv(b)), self.mul(a, b))
    }

    pub fn square(&self, a: PcElem) -> PcElem {
        self.mul(a, a)
    }

    pub fn elem_order(&self, a: PcElem) -> usize {
        let mut p = a;
        let mut o = 1;
        while p != PcElem::IDENTITY {
            p = self.mul(p, a);
            o += 1;
        }
        o
    }

    pub fn is_involution(&self, a: PcElem) -> bool {
        a != PcElem::IDENTITY && self.square(a) == PcElem::IDENTITY
    }

    /// Evaluate a word of generator indices.
    pub fn eval_word(&self, word: &Word) -> PcElem {
        word.iter()
            .fold(PcElem::IDENTITY, |acc, &l| self.mul(acc, PcElem(1 << l)))
    }

    /// Parse a `*`-separated word such as `"t1*a2"` into an element.
    pub fn parse_elem(&self, text: &str) -> Result<PcElem> {
        Ok(self.eval_word(&self.pres.parse_word(text)?))
    }

    /// Normal-form display, e.g. `t1*a1`; the identity prints as `1`.
    pub fn format_elem(&self, a: PcElem) -> String {
        if a == PcElem::IDENTITY {
            return "1".into();
        }
        let names = self.pres.names();
        (0..self.n)
            .filter(|&i| a.exponent(i))
            .map(|i| names[i].as_str())
            .collect::<Vec<_>>()
            .join("*")
    }
}

#[cfg(test)]
mod tests {
    use super::super::presentation::PcPresentation;
    use super::*;

    fn c2() -> PcGroup {
        PcGroup::from_presentation(PcPresentation::from_relations(&["x"], &[], &[]).unwrap())
            .unwrap()
    }

    #[test]
    fn single_involution_gives_c2() {
        let g = c2();
        assert_eq!(g.order(), 2);
        let x = g.generator(0);
        assert_eq!(g.mul(x, x), PcElem::IDENTITY);
    }

    #[test]
    fn trivial_group_is_accepted() {
        let g = PcGroup::from_presentation(PcPresentation::from_relations(&[], &[], &[]).unwrap())
            .unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.inv(PcElem::IDENTITY), PcElem::IDENTITY);
    }

    #[test]
    fn cyclic_four_has_element_of_order_four() {
        let pres = PcPresentation::from_relations(&["v", "w"], &[("w", "v")], &[]).unwrap();
        let g = PcGroup::from_presentation(pres).unwrap();
        assert_eq!(g.order(), 4);
        let w = g.generator(1);
        assert_eq!(g.elem_order(w), 4);
        assert_eq!(g.square(w), g.generator(0));
    }

    #[test]
    fn dihedral_eight_multiplication() {
        // r of order 4 via v = r^2, s inverting r
        let pres =
            PcPresentation::from_relations(&["v", "r", "s"], &[("r", "v")], &[("s", "r", "v")])
                .unwrap();
        let g = PcGroup::from_presentation(pres).unwrap();
        assert_eq!(g.order(), 8);
        let r = g.generator(1);
        let s = g.generator(2);
        assert_eq!(g.conj(r, s), g.inv(r));
        assert_eq!(g.elem_order(g.mul(r, s)), 2);
    }

    #[test]
    fn inconsistent_presentation_is_rejected() {
        // "s inverts t" with t of order 2 and s^2 = t is fine (that is C4 x ...
        // actually D8-ish); a genuinely inconsistent one: [b,a] = a is not a
        // word below b=1... use index trick: force c(a) not an automorphism.
        // Take a, b with [b, a] = c where c does not commute correctly:
        // simplest inconsistency: a^2 = 1, b^2 = 1, [b, a] = b is rejected at
        // validation (word not below b), so use three generators where the
        // conjugation fails the automorphism check:
        // z, a with a^2 = z, and b with [b, a] = z, [b, z] = z.
        // Conjugation by b: z -> z*inv(z) = 1? That kills injectivity.
        let pres = PcPresentation::from_relations(
            &["z", "a", "b"],
            &[("a", "z")],
            &[("b", "a", "z"), ("b", "z", "z")],
        )
        .unwrap();
        let err = PcGroup::from_presentation(pres);
        assert!(
            matches!(err, Err(Error::InconsistentPresentation(_))),
            "{err:?}"
        );
    }

    #[test]
    fn associativity_and_inverses_hold_exhaustively_on_small_groups() {
        let pres =
            PcPresentation::from_relations(&["v", "r", "s"], &[("r", "v")], &[("s", "r", "v")])
                .unwrap();
        let g = PcGroup::from_presentation(pres).unwrap();
        for a in g.elements() {
            assert_eq!(g.mul(a, g.inv(a)), PcElem::IDENTITY);
            assert_eq!(g.mul(g.inv(a), a), PcElem::IDENTITY);
            assert_eq!(g.mul(a, PcElem::IDENTITY), a);
            assert_eq!(g.mul(PcElem::IDENTITY, a), a);
            for b in g.elements() {
                for c in g.elements() {
                    assert_eq!(g.mul(g.mul(a, b), c), g.mul(a, g.mul(b, c)));
                }
            }
        }
    }
}
