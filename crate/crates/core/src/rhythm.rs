//! Onset bit strings on the even lattice.
//!
//! A rhythm of `m` pulses is written as `m` ASCII characters, `1` for an
//! onset and `0` otherwise. Onsets are polygon vertices on the `m`-point
//! lattice; the gaps between consecutive onsets are the interval vector.

use crate::error::{Error, Result};
use crate::geometry::VertexSelection;
use crate::lattice::IntervalVector;

/// Bit string of a selection on an `m`-point lattice, rotated so the first
/// selected vertex sits at position 0.
pub fn encode_rhythm(sel: &VertexSelection, m: usize) -> Result<String> {
    if let Some(&x) = sel.indices().iter().find(|&&x| x >= m) {
        return Err(Error::IndexOutOfRange { index: x, len: m });
    }
    let origin = sel.indices()[0];
    let mut bits = vec![b'0'; m];
    for &x in sel.indices() {
        bits[(x + m - origin) % m] = b'1';
    }
    Ok(String::from_utf8(bits).expect("ascii"))
}

/// Bit string of an interval vector, first onset at position 0.
pub fn encode_intervals(iv: &IntervalVector) -> String {
    encode_rhythm(&iv.to_selection(0), iv.m()).expect("indices are below m")
}

/// Gaps between consecutive onsets, starting from the first `1`.
pub fn decode_rhythm(bits: &str) -> Result<IntervalVector> {
    if bits.is_empty() {
        return Err(Error::Rhythm("empty bit string".into()));
    }
    let mut onsets = Vec::new();
    for (pos, c) in bits.chars().enumerate() {
        match c {
            '1' => onsets.push(pos),
            '0' => {}
            other => {
                return Err(Error::Rhythm(format!(
                    "unexpected character {other:?} at {pos}"
                )))
            }
        }
    }
    if onsets.len() < 3 {
        return Err(Error::Rhythm(format!(
            "need at least 3 onsets, found {}",
            onsets.len()
        )));
    }
    let m = bits.len();
    let k = onsets.len();
    let gaps = (0..k)
        .map(|w| {
            if w + 1 < k {
                onsets[w + 1] - onsets[w]
            } else {
                onsets[0] + m - onsets[w]
            }
        })
        .collect();
    IntervalVector::new(gaps, m)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn clave_son() {
        let iv = IntervalVector::new(vec![3, 3, 4, 2, 4], 16).unwrap();
        assert_eq!(encode_intervals(&iv), "1001001000101000");
        assert_eq!(
            decode_rhythm("1001001000101000").unwrap().gaps(),
            &[3, 3, 4, 2, 4]
        );
    }

    #[test]
    fn triangle_rhythm() {
        let iv = IntervalVector::new(vec![2, 2, 2], 6).unwrap();
        assert_eq!(encode_intervals(&iv), "101010");
        assert_eq!(decode_rhythm("101010").unwrap().gaps(), &[2, 2, 2]);
    }

    #[test]
    fn encode_rotates_to_first_vertex() {
        let sel = VertexSelection::new(vec![2, 5, 8, 12, 14]).unwrap();
        assert_eq!(encode_rhythm(&sel, 16).unwrap(), "1001001000101000");
        assert!(encode_rhythm(&sel, 14).is_err());
    }

    #[test]
    fn decode_errors() {
        assert!(decode_rhythm("").is_err());
        assert!(decode_rhythm("10000001").is_err());
        assert!(decode_rhythm("10a1001").is_err());
    }

    #[test]
    fn decode_starts_at_first_onset() {
        assert_eq!(decode_rhythm("0101010").unwrap().gaps(), &[2, 2, 3]);
    }
}
