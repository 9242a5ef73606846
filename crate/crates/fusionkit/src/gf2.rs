//! Dense linear algebra over the field with two elements.
//!
//! Rows are packed into `u64` words. The only data structure is an
//! incrementally reduced linear system, which is what the cohomology and
//! commutant computations actually need: feed equations in, then ask for
//! consistency, a particular solution, or a null-space basis.

/// A bit vector of fixed width, one unknown per bit.
pub type BitVec = Vec<u64>;

pub fn bitvec_zero(width: usize) -> BitVec {
    vec![0u64; width.div_ceil(64)]
}

pub fn bitvec_get(v: &[u64], i: usize) -> bool {
    v[i / 64] >> (i % 64) & 1 == 1
}

pub fn bitvec_set(v: &mut [u64], i: usize, val: bool) {
    if val {
        v[i / 64] |= 1 << (i % 64);
    } else {
        v[i / 64] &= !(1 << (i % 64));
    }
}

pub fn bitvec_xor(dst: &mut [u64], src: &[u64]) {
    for (d, s) in dst.iter_mut().zip(src) {
        *d ^= s;
    }
}

fn leading_bit(v: &[u64]) -> Option<usize> {
    for (w, word) in v.iter().enumerate() {
        if *word != 0 {
            return Some(w * 64 + word.trailing_zeros() as usize);
        }
    }
    None
}

/// Linear system over F2 in row-reduced form, built one equation at a time.
#[derive(Clone, Debug)]
pub struct LinearSystem {
    width: usize,
    /// Reduced rows paired with their right-hand sides, keyed by pivot column.
    rows: Vec<(BitVec, bool)>,
    pivots: Vec<usize>,
    inconsistent: bool,
}

impl LinearSystem {
    pub fn new(width: usize) -> Self {
        LinearSystem {
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            inconsistent: false,
        }
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn is_consistent(&self) -> bool {
        !self.inconsistent
    }

    pub fn nullity(&self) -> usize {
        self.width - self.rank()
    }

    /// Add the equation `coeffs · x = rhs`, reducing it against the rows seen
    /// so far. Returns true if the equation was independent of them.
    pub fn add_equation(&mut self, coeffs: &[u64], rhs: bool) -> bool {
        let mut row = coeffs.to_vec();
        let mut r = rhs;
        for (v, b) in &self.rows {
            let p = leading_bit(v).expect("stored rows are nonzero");
            if bitvec_get(&row, p) {
                bitvec_xor(&mut row, v);
                r ^= *b;
            }
        }
        match leading_bit(&row) {
            None => {
                if r {
                    self.inconsistent = true;
                }
                false
            }
            Some(p) => {
                // keep the stored rows fully reduced against each other
                for (v, b) in self.rows.iter_mut() {
                    if bitvec_get(v, p) {
                        bitvec_xor(v, &row);
                        *b ^= r;
                    }
                }
                self.rows.push((row, r));
                self.pivots.push(p);
                let mut order: Vec<usize> = (0..self.rows.len()).collect();
                order.sort_by_key(|&i| self.pivots[i]);
                self.rows = order.iter().map(|&i| self.rows[i].clone()).collect();
                self.pivots.sort_unstable();
                true
            }
        }
    }

    /// A particular solution, with free unknowns set to zero.
    pub fn solve(&self) -> Option<BitVec> {
        if self.inconsistent {
            return None;
        }
        let mut x = bitvec_zero(self.width);
        for (v, b) in &self.rows {
            if *b {
                let p = leading_bit(v).unwrap();
                bitvec_set(&mut x, p, true);
            }
        }
        Some(x)
    }

    /// Basis of the homogeneous solution space.
    pub fn nullspace_basis(&self) -> Vec<BitVec> {
        let mut basis = Vec::new();
        let pivot_set: std::collections::HashSet<usize> = self.pivots.iter().copied().collect();
        for free in 0..self.width {
            if pivot_set.contains(&free) {
                continue;
            }
            let mut x = bitvec_zero(self.width);
            bitvec_set(&mut x, free, true);
            for (v, _) in &self.rows {
                if bitvec_get(v, free) {
                    let p = leading_bit(v).unwrap();
                    bitvec_set(&mut x, p, true);
                }
            }
            basis.push(x);
        }
        basis
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn eq(width: usize, bits: &[usize]) -> BitVec {
        let mut v = bitvec_zero(width);
        for &b in bits {
            bitvec_set(&mut v, b, true);
        }
        v
    }

    #[test]
    fn solves_small_system() {
        // x0 + x1 = 1, x1 + x2 = 0, x0 + x2 = 1
        let mut sys = LinearSystem::new(3);
        sys.add_equation(&eq(3, &[0, 1]), true);
        sys.add_equation(&eq(3, &[1, 2]), false);
        sys.add_equation(&eq(3, &[0, 2]), true);
        assert!(sys.is_consistent());
        assert_eq!(sys.rank(), 2);
        let x = sys.solve().unwrap();
        assert!(bitvec_get(&x, 0) ^ bitvec_get(&x, 1));
        assert!(!(bitvec_get(&x, 1) ^ bitvec_get(&x, 2)));
        assert_eq!(sys.nullspace_basis().len(), 1);
    }

    #[test]
    fn detects_inconsistency() {
        let mut sys = LinearSystem::new(2);
        sys.add_equation(&eq(2, &[0, 1]), false);
        sys.add_equation(&eq(2, &[0, 1]), true);
        assert!(!sys.is_consistent());
        assert!(sys.solve().is_none());
    }

    #[test]
    fn nullspace_vectors_satisfy_equations() {
        let mut sys = LinearSystem::new(70); // force multi-word rows
        sys.add_equation(&eq(70, &[0, 65]), false);
        sys.add_equation(&eq(70, &[1, 2, 69]), false);
        for v in sys.nullspace_basis() {
            assert!(!(bitvec_get(&v, 0) ^ bitvec_get(&v, 65)));
            assert!(
                !(bitvec_get(&v, 1) ^ bitvec_get(&v, 2) ^ bitvec_get(&v, 69))
            );
        }
        assert_eq!(sys.nullspace_basis().len(), 68);
    }
}
