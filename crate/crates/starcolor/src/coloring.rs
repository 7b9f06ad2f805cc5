//! Vertex colorings and violation witnesses.

use std::collections::BTreeSet;

use serde::ser::SerializeStruct;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// A total assignment of positive integer colors to vertices `0..n`.
///
/// The color set is not required to be contiguous: the verifier judges
/// whatever it is given. Solver and construction outputs always use exactly
/// `{1..=k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    colors: Vec<u32>,
}

impl Coloring {
    pub fn new(colors: Vec<u32>) -> Result<Self> {
        if let Some(v) = colors.iter().position(|&c| c == 0) {
            return Err(Error::InvalidInput(format!(
                "color of vertex {v} must be a positive integer"
            )));
        }
        Ok(Self { colors })
    }

    pub fn color(&self, v: usize) -> u32 {
        self.colors[v]
    }

    pub fn len(&self) -> usize {
        self.colors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.colors.is_empty()
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.colors
    }

    /// Distinct colors actually used, ascending.
    pub fn used_colors(&self) -> BTreeSet<u32> {
        self.colors.iter().copied().collect()
    }

    /// Number of distinct colors used.
    pub fn num_colors(&self) -> usize {
        self.used_colors().len()
    }
}

#[derive(Serialize, Deserialize)]
struct ColoringWire {
    colors: Vec<u32>,
}

impl Serialize for Coloring {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        ColoringWire {
            colors: self.colors.clone(),
        }
        .serialize(ser)
    }
}

impl<'de> Deserialize<'de> for Coloring {
    fn deserialize<D: Deserializer<'de>>(de: D) -> std::result::Result<Self, D::Error> {
        let wire = ColoringWire::deserialize(de)?;
        Coloring::new(wire.colors).map_err(serde::de::Error::custom)
    }
}

/// A violating structure proving an assignment is not a star coloring.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness {
    /// An edge whose endpoints share a color.
    EdgeConflict { u: usize, v: usize },
    /// A path on four vertices carrying at most two distinct colors, listed
    /// in path order.
    BicoloredP4 { path: [usize; 4] },
}

impl Serialize for Witness {
    fn serialize<S: Serializer>(&self, ser: S) -> std::result::Result<S::Ok, S::Error> {
        let mut st = ser.serialize_struct("Witness", 2)?;
        match self {
            Witness::EdgeConflict { u, v } => {
                st.serialize_field("kind", "edge-conflict")?;
                st.serialize_field("vertices", &[*u, *v])?;
            }
            Witness::BicoloredP4 { path } => {
                st.serialize_field("kind", "bicolored-p4")?;
                st.serialize_field("vertices", path)?;
            }
        }
        st.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn zero_colors_are_rejected() {
        assert!(Coloring::new(vec![1, 0, 2]).is_err());
    }

    #[test]
    fn used_colors_need_not_be_contiguous() {
        let c = Coloring::new(vec![2, 5, 2]).unwrap();
        assert_eq!(c.num_colors(), 2);
        assert_eq!(c.used_colors().into_iter().collect::<Vec<_>>(), [2, 5]);
    }

    #[test]
    fn json_round_trip_and_shape() {
        let c = Coloring::new(vec![1, 2, 3]).unwrap();
        let text = serde_json::to_string(&c).unwrap();
        assert_eq!(text, r#"{"colors":[1,2,3]}"#);
        assert_eq!(serde_json::from_str::<Coloring>(&text).unwrap(), c);
        assert!(serde_json::from_str::<Coloring>(r#"{"colors":[1,0]}"#).is_err());
    }

    #[test]
    fn witness_json_shapes() {
        let e = Witness::EdgeConflict { u: 0, v: 1 };
        assert_eq!(
            serde_json::to_string(&e).unwrap(),
            r#"{"kind":"edge-conflict","vertices":[0,1]}"#
        );
        let p = Witness::BicoloredP4 { path: [0, 1, 2, 3] };
        assert_eq!(
            serde_json::to_string(&p).unwrap(),
            r#"{"kind":"bicolored-p4","vertices":[0,1,2,3]}"#
        );
    }
}
