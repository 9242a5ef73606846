//! The wreath-product model: `G = (K x K)<x>` with the swap involution `x`.
//! Its swap centralizer is `<x> x diag(K)`, and the normalizer of
//! `E = <x>F` (for `F` maximal elementary abelian in the diagonal Sylow
//! 2-subgroup) carries an elementary abelian 2-group of twice the rank of
//! `F` inside its 2-core. The base groups here are desk-scale stand-ins; the
//! check is a strategy analogue, not a verification of any sporadic case.

use crate::fusion::{
    alternating6, l32, o2_of_set, sylow2_of_set, wreath_double, Perm, PermGroup, PermSet,
};
use crate::Result;

use super::report::{CheckReport, ReportBuilder};

#[derive(Copy, Clone, Debug, PartialEq, Eq)]
pub enum WreathBase {
    A6,
    L32,
}

impl WreathBase {
    pub fn label(self) -> &'static str {
        match self {
            WreathBase::A6 => "a6",
            WreathBase::L32 => "l32",
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        match text.to_ascii_lowercase().as_str() {
            "a6" => Ok(WreathBase::A6),
            "l32" | "l3(2)" => Ok(WreathBase::L32),
            other => Err(crate::Error::Parse(format!(
                "unknown wreath base {other:?}"
            ))),
        }
    }

    fn group(self) -> PermGroup {
        match self {
            WreathBase::A6 => alternating6(),
            WreathBase::L32 => l32(),
        }
    }
}

fn wreath_body(b: &mut ReportBuilder, base: &PermGroup, swap_override: Option<Perm>) -> Result<()> {
    let w = wreath_double(base)?;
    let x = swap_override.unwrap_or_else(|| w.swap.clone());
    let whole = w.group.as_set()?;
    b.detail("group_order", w.group.order() as u64);
    b.assert_eq(
        "group_order_is_twice_base_squared",
        w.group.order() as u64,
        2 * (base.order() as u64) * (base.order() as u64),
    );

    // centralizer of the swap involution
    let c_gx = whole.centralizer_of_element(&x);
    let diag = PermSet::closure(w.group.degree(), &w.diagonal);
    let mut expected_gens = w.diagonal.clone();
    expected_gens.push(x.clone());
    let expected = PermSet::closure(w.group.degree(), &expected_gens);
    b.detail("centralizer_order", c_gx.order() as u64);
    b.assert_eq("diagonal_order", diag.order() as u64, base.order() as u64);
    b.assert_true("centralizer_equals_swap_times_diagonal", c_gx == expected);
    b.assert_true("swap_outside_diagonal", !diag.contains(&x));
    b.assert_true(
        "swap_central_in_centralizer",
        c_gx.elements()
            .iter()
            .all(|g| g.compose(&x) == x.compose(g)),
    );

    // Sylow 2-subgroup through the swap, and the 2-rank bookkeeping
    let seed = PermSet::closure(w.group.degree(), std::slice::from_ref(&x));
    let s = sylow2_of_set(&whole, Some(&seed));
    b.detail("sylow_order", s.order() as u64);
    b.assert_true("sylow_odd_index", (w.group.order() / s.order()) % 2 == 1);
    b.assert_true("sylow_contains_swap", s.contains(&x));
    let m_s = s.two_rank();
    let c_sx = s.centralizer_of_element(&x);
    let m_csx = c_sx.two_rank();
    b.detail("rank_of_sylow", m_s as u64);
    b.detail("rank_of_swap_centralizer_in_sylow", m_csx as u64);

    // F: maximal elementary abelian in the diagonal Sylow; E = <x>F
    let diag_sylow = sylow2_of_set(&diag, None);
    b.detail("diagonal_sylow_order", diag_sylow.order() as u64);
    let f = diag_sylow
        .max_elementary_abelians()
        .into_iter()
        .next()
        .expect("a 2-group has elementary abelian subgroups");
    let m_f = f.two_rank();
    b.detail("f_order", f.order() as u64);
    b.assert_eq("f_rank", m_f as u64, 2);
    let mut e_gens: Vec<Perm> = f.generators().to_vec();
    e_gens.push(x.clone());
    let e = PermSet::closure(w.group.degree(), &e_gens);
    b.detail("e_order", e.order() as u64);
    b.assert_eq("e_rank", e.two_rank() as u64, m_f as u64 + 1);

    // rank doubling inside the 2-core of the E-normalizer
    let n = whole.normalizer_of(&e);
    let o2 = o2_of_set(&n);
    let rank_o2 = o2.two_rank();
    b.detail("e_normalizer_order", n.order() as u64);
    b.detail("o2_of_normalizer_order", o2.order() as u64);
    b.detail("rank_in_normalizer_core", rank_o2 as u64);
    b.assert_true("rank_doubling", rank_o2 >= 2 * m_f);
    Ok(())
}

pub fn check_wreath_model(base: WreathBase) -> CheckReport {
    let mut b = ReportBuilder::new(&format!("check_wreath_model:{}", base.label()), None);
    b.detail(
        "model_note",
        "desk-scale stand-in base group; strategy analogue of the wreath shape, \
         not a computation in any sporadic group",
    );
    match wreath_body(&mut b, &base.group(), None) {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}

/// Corrupted variant: the designated involution lives in one factor instead
/// of swapping them, so the centralizer identity fails.
pub fn check_wreath_corrupted() -> CheckReport {
    let mut b = ReportBuilder::new("check_wreath_model#corrupted", None);
    let base = alternating6();
    let bad_x = Perm::from_cycles(12, &[&[0, 1], &[2, 3]]).expect("valid involution");
    match wreath_body(&mut b, &base, Some(bad_x)) {
        Ok(()) => b.finish(),
        Err(e) => b.finish_error(&e),
    }
}
