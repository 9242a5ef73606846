//! Text interchange for matrix generator lists.
//!
//! Format: a dimension header line, then one matrix per line. Each row packs
//! into two lowercase hex digits (low bit = column 0), rows concatenated in
//! order, so a 4x4 matrix is 8 hex characters.

use crate::{Error, Result};

use super::MatF2;

pub fn group_to_text(dim: usize, mats: &[MatF2]) -> String {
    let mut out = format!("{dim}\n");
    for m in mats {
        for i in 0..dim {
            out.push_str(&format!("{:02x}", m.row(i)));
        }
        out.push('\n');
    }
    out
}

pub fn group_from_text(text: &str) -> Result<(usize, Vec<MatF2>)> {
    let mut lines = text.lines().map(str::trim).filter(|l| !l.is_empty());
    let dim: usize = lines
        .next()
        .ok_or_else(|| Error::Parse("empty matrix file".into()))?
        .parse()
        .map_err(|_| Error::Parse("dimension header is not a number".into()))?;
    if !(1..=8).contains(&dim) {
        return Err(Error::Parse(format!("dimension {dim} out of range 1..=8")));
    }
    let mut mats = Vec::new();
    for line in lines {
        if line.len() != 2 * dim {
            return Err(Error::Parse(format!(
                "matrix line {line:?} should have {} hex digits",
                2 * dim
            )));
        }
        let mut rows = Vec::with_capacity(dim);
        for i in 0..dim {
            let byte = u8::from_str_radix(&line[2 * i..2 * i + 2], 16)
                .map_err(|_| Error::Parse(format!("bad hex in {line:?}")))?;
            rows.push(byte);
        }
        mats.push(MatF2::from_rows(&rows));
    }
    Ok((dim, mats))
}

#[cfg(test)]
mod tests {
    use super::super::{build_gl24_in_gl42, gl42};
    use super::*;

    #[test]
    fn round_trips_generator_lists() {
        for g in [gl42(), build_gl24_in_gl42()] {
            let text = group_to_text(g.dim(), g.generators());
            let (dim, mats) = group_from_text(&text).unwrap();
            assert_eq!(dim, g.dim());
            assert_eq!(mats, g.generators());
        }
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(group_from_text("").is_err());
        assert!(group_from_text("4\nzz").is_err());
        assert!(group_from_text("4\n0102\n").is_err()); // wrong width
    }
}
