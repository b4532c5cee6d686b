//! ℓ-partitions and their boxes.
//!
//! Coordinates are 1-based: a box has column `x` and row `y`, rows are listed
//! longest first, and the content of a box is `x − y`.

mod model;
mod order;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

pub use model::{ChargeModel, GenericCharges, SParamsCharges, ZClass};
pub use order::{
    box_compare, box_compare_in, boxes_equivalent, c_function, c_of_box, charged_content, leq_c, preceq_in,
    preceq_multipartition, BoxOrder,
};

/// An integer partition: weakly decreasing positive parts.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<u32>);

impl Partition {
    /// Builds a partition, sorting the parts and dropping zeros.
    pub fn new(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Self(parts)
    }

    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// The rectangle with `rows` rows of length `cols`.
    pub fn rectangle(rows: u32, cols: u32) -> Self {
        if cols == 0 {
            return Self::empty();
        }
        Self(vec![cols; rows as usize])
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn size(&self) -> u64 {
        self.0.iter().map(|&p| p as u64).sum()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// Length of row `y` (1-based), zero past the last row.
    pub fn row(&self, y: u32) -> u32 {
        self.0.get(y as usize - 1).copied().unwrap_or(0)
    }

    /// Length of column `x` (1-based).
    pub fn column(&self, x: u32) -> u32 {
        self.0.iter().take_while(|&&p| p >= x).count() as u32
    }

    pub fn contains(&self, x: u32, y: u32) -> bool {
        x >= 1 && y >= 1 && x <= self.row(y)
    }

    /// All partitions of `n`, sorted increasingly.
    pub fn all(n: u32) -> Vec<Partition> {
        fn rec(rest: u32, max: u32, prefix: &mut Vec<u32>, out: &mut Vec<Partition>) {
            if rest == 0 {
                out.push(Partition(prefix.clone()));
                return;
            }
            for part in (1..=rest.min(max)).rev() {
                prefix.push(part);
                rec(rest - part, part, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        rec(n, n, &mut Vec::new(), &mut out);
        out.sort();
        out
    }

    /// The conjugate partition.
    pub fn transpose(&self) -> Self {
        let cols = self.0.first().copied().unwrap_or(0);
        Self((1..=cols).map(|x| self.column(x)).collect())
    }
}

/// A box of a multipartition: component `i`, column `x`, row `y`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Cell {
    pub i: usize,
    pub x: u32,
    pub y: u32,
}

impl Cell {
    pub fn new(i: usize, x: u32, y: u32) -> Self {
        Self { i, x, y }
    }

    /// `x − y`.
    pub fn content(&self) -> i64 {
        self.x as i64 - self.y as i64
    }
}

impl fmt::Display for Cell {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{})", self.i, self.x, self.y)
    }
}

/// An ℓ-partition `ν = (ν^(0), …, ν^(ℓ−1))`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultiPartition {
    components: Vec<Partition>,
}

impl MultiPartition {
    pub fn new(components: Vec<Partition>) -> Self {
        Self { components }
    }

    /// The ℓ-tuple of empty partitions.
    pub fn empty(ell: usize) -> Self {
        Self { components: vec![Partition::empty(); ell] }
    }

    /// From raw row lengths, e.g. `&[&[4, 2], &[1]]`.
    pub fn from_rows(rows: &[&[u32]]) -> Self {
        Self::new(rows.iter().map(|r| Partition::new(r.to_vec())).collect())
    }

    pub fn ell(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Partition] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Partition {
        &self.components[i]
    }

    /// `|ν|`.
    pub fn size(&self) -> u64 {
        self.components.iter().map(Partition::size).sum()
    }

    pub fn contains(&self, b: &Cell) -> bool {
        b.i < self.ell() && self.components[b.i].contains(b.x, b.y)
    }

    /// Member boxes, component by component, row by row.
    pub fn cells(&self) -> Vec<Cell> {
        let mut out = Vec::with_capacity(self.size() as usize);
        for (i, part) in self.components.iter().enumerate() {
            for (row, &len) in part.parts().iter().enumerate() {
                for x in 1..=len {
                    out.push(Cell::new(i, x, row as u32 + 1));
                }
            }
        }
        out
    }

    /// Boxes whose addition keeps every component a partition, ordered by
    /// component and then by row.
    pub fn addable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, part) in self.components.iter().enumerate() {
            let rows = part.parts().len() as u32;
            for y in 1..=rows + 1 {
                if y == 1 || part.row(y - 1) > part.row(y) {
                    out.push(Cell::new(i, part.row(y) + 1, y));
                }
            }
        }
        out
    }

    /// Corner boxes, ordered by component and then by row.
    pub fn removable_boxes(&self) -> Vec<Cell> {
        let mut out = Vec::new();
        for (i, part) in self.components.iter().enumerate() {
            for (idx, &len) in part.parts().iter().enumerate() {
                let y = idx as u32 + 1;
                if len > part.row(y + 1) {
                    out.push(Cell::new(i, len, y));
                }
            }
        }
        out
    }

    pub fn is_addable(&self, b: &Cell) -> bool {
        b.i < self.ell() && {
            let part = &self.components[b.i];
            b.y >= 1 && b.x == part.row(b.y) + 1 && (b.y == 1 || part.row(b.y - 1) >= b.x)
        }
    }

    pub fn is_removable(&self, b: &Cell) -> bool {
        b.i < self.ell() && {
            let part = &self.components[b.i];
            b.y >= 1 && b.x >= 1 && part.row(b.y) == b.x && part.row(b.y + 1) < b.x
        }
    }

    /// `ν + b`; errors when `b` is not addable.
    pub fn add_box(&self, b: &Cell) -> Result<Self> {
        if !self.is_addable(b) {
            return Err(Error::NotAddable(b.to_string()));
        }
        let mut rows = self.components[b.i].0.clone();
        if b.y as usize > rows.len() {
            rows.push(1);
        } else {
            rows[b.y as usize - 1] += 1;
        }
        let mut components = self.components.clone();
        components[b.i] = Partition(rows);
        Ok(Self { components })
    }

    /// `ν − b`; errors when `b` is not removable.
    pub fn remove_box(&self, b: &Cell) -> Result<Self> {
        if !self.is_removable(b) {
            return Err(Error::ModelViolation(format!("box {b} is not removable from {self}")));
        }
        let mut rows = self.components[b.i].0.clone();
        rows[b.y as usize - 1] -= 1;
        if rows[b.y as usize - 1] == 0 {
            rows.pop();
        }
        let mut components = self.components.clone();
        components[b.i] = Partition(rows);
        Ok(Self { components })
    }
}

/// All ℓ-partitions of `n`, sorted lexicographically by (component 0, component 1, …).
pub fn enumerate_multipartitions(ell: usize, n: u64) -> Vec<MultiPartition> {
    let by_size: Vec<Vec<Partition>> = (0..=n as u32).map(Partition::all).collect();
    let mut out = Vec::new();
    fn rec(
        comp: usize,
        ell: usize,
        rest: u32,
        by_size: &[Vec<Partition>],
        prefix: &mut Vec<Partition>,
        out: &mut Vec<MultiPartition>,
    ) {
        if comp + 1 == ell {
            prefix.push(Partition::empty());
            for p in &by_size[rest as usize] {
                *prefix.last_mut().unwrap() = p.clone();
                out.push(MultiPartition::new(prefix.clone()));
            }
            prefix.pop();
            return;
        }
        for size in 0..=rest {
            for p in &by_size[size as usize] {
                prefix.push(p.clone());
                rec(comp + 1, ell, rest - size, by_size, prefix, out);
                prefix.pop();
            }
        }
    }
    if ell == 0 {
        if n == 0 {
            out.push(MultiPartition::new(Vec::new()));
        }
        return out;
    }
    rec(0, ell, n as u32, &by_size, &mut Vec::new(), &mut out);
    out.sort();
    out
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "∅");
        }
        let rows: Vec<String> = self.0.iter().map(u32::to_string).collect();
        write!(f, "({})", rows.join(","))
    }
}

impl fmt::Display for MultiPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(Partition::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl FromStr for MultiPartition {
    type Err = Error;

    /// Parses the canonical text form `((4,2),(1))`; an empty component may be
    /// written `∅` or `()`.
    fn from_str(text: &str) -> Result<Self> {
        let bad = |why: &str| Error::Parse(format!("multipartition {text:?}: {why}"));
        let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let inner = t
            .strip_prefix('(')
            .and_then(|s| s.strip_suffix(')'))
            .ok_or_else(|| bad("must be wrapped in parentheses"))?;
        let mut components = Vec::new();
        let mut rest = inner;
        while !rest.is_empty() {
            if let Some(after) = rest.strip_prefix('∅') {
                components.push(Partition::empty());
                rest = after;
            } else if rest.starts_with('(') {
                let close = rest.find(')').ok_or_else(|| bad("unbalanced parentheses"))?;
                let body = &rest[1..close];
                let parts = if body.is_empty() {
                    Vec::new()
                } else {
                    body.split(',')
                        .map(|p| p.parse::<u32>().map_err(|_| bad("rows must be positive integers")))
                        .collect::<Result<Vec<_>>>()?
                };
                if parts.contains(&0) || parts.windows(2).any(|w| w[0] < w[1]) {
                    return Err(bad("rows must be positive and weakly decreasing"));
                }
                components.push(Partition(parts));
                rest = &rest[close + 1..];
            } else {
                return Err(bad("expected a component"));
            }
            if let Some(after) = rest.strip_prefix(',') {
                if after.is_empty() {
                    return Err(bad("trailing comma"));
                }
                rest = after;
            } else if !rest.is_empty() {
                return Err(bad("components must be separated by commas"));
            }
        }
        if components.is_empty() {
            return Err(bad("needs at least one component"));
        }
        Ok(Self { components })
    }
}

#[derive(Serialize, Deserialize)]
struct MultiPartitionJson {
    components: Vec<Vec<u32>>,
}

impl Serialize for MultiPartition {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        MultiPartitionJson { components: self.components.iter().map(|p| p.0.clone()).collect() }.serialize(s)
    }
}

impl<'de> Deserialize<'de> for MultiPartition {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let raw = MultiPartitionJson::deserialize(d)?;
        for rows in &raw.components {
            if rows.contains(&0) || rows.windows(2).any(|w| w[0] < w[1]) {
                return Err(serde::de::Error::custom("rows must be positive and weakly decreasing"));
            }
        }
        Ok(Self { components: raw.components.into_iter().map(Partition).collect() })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn mp(text: &str) -> MultiPartition {
        text.parse().unwrap()
    }

    #[test]
    fn enumeration_counts_and_order() {
        assert_eq!(enumerate_multipartitions(2, 0), vec![mp("(∅,∅)")]);
        assert_eq!(enumerate_multipartitions(2, 2).len(), 5);
        assert_eq!(enumerate_multipartitions(3, 1).len(), 3);
        // Σ_k p(k)p(n−k) for ℓ = 2 and n = 6.
        assert_eq!(enumerate_multipartitions(2, 6).len(), 65);
        let all = enumerate_multipartitions(3, 5);
        assert!(all.windows(2).all(|w| w[0] < w[1]));
        assert!(all.iter().all(|nu| nu.size() == 5));
    }

    #[test]
    fn addable_and_removable_examples() {
        let nu = mp("((2,2),∅)");
        assert_eq!(nu.removable_boxes(), vec![Cell::new(0, 2, 2)]);
        assert_eq!(nu.addable_boxes(), vec![Cell::new(0, 3, 1), Cell::new(0, 1, 3), Cell::new(1, 1, 1)]);
        let empty = MultiPartition::empty(3);
        assert!(empty.removable_boxes().is_empty());
        assert_eq!(empty.addable_boxes().len(), 3);
        assert_eq!(mp("((1),(1))").removable_boxes(), vec![Cell::new(0, 1, 1), Cell::new(1, 1, 1)]);
    }

    #[test]
    fn add_remove_round_trip() {
        for nu in enumerate_multipartitions(3, 4) {
            for b in nu.addable_boxes() {
                let bigger = nu.add_box(&b).unwrap();
                assert!(bigger.is_removable(&b));
                assert_eq!(bigger.remove_box(&b).unwrap(), nu);
            }
            for b in nu.removable_boxes() {
                assert!(nu.contains(&b));
                assert!(nu.remove_box(&b).unwrap().is_addable(&b));
            }
            assert_eq!(nu.cells().len() as u64, nu.size());
            for i in 0..nu.ell() {
                let mut contents: Vec<i64> = nu
                    .addable_boxes()
                    .into_iter()
                    .chain(nu.removable_boxes())
                    .filter(|b| b.i == i)
                    .map(|b| b.content())
                    .collect();
                let len = contents.len();
                contents.sort();
                contents.dedup();
                assert_eq!(contents.len(), len);
            }
        }
        assert!(mp("((2),∅)").add_box(&Cell::new(0, 2, 2)).is_err());
    }

    #[test]
    fn text_and_json_forms() {
        let nu = mp("((4,2),(1))");
        assert_eq!(nu.to_string(), "((4,2),(1))");
        assert_eq!(mp("((),(2,2))").to_string(), "(∅,(2,2))");
        assert_eq!(serde_json::to_string(&nu).unwrap(), r#"{"components":[[4,2],[1]]}"#);
        let back: MultiPartition = serde_json::from_str(r#"{"components":[[4,2],[1]]}"#).unwrap();
        assert_eq!(back, nu);
        assert!("((1,2),∅)".parse::<MultiPartition>().is_err());
        assert!("(1)".parse::<MultiPartition>().is_err());
        assert_eq!(serde_json::to_string(&Cell::new(0, 2, 1)).unwrap(), r#"{"i":0,"x":2,"y":1}"#);
    }

    #[test]
    fn transpose_and_rectangles() {
        assert_eq!(Partition::new(vec![4, 2]).transpose(), Partition::new(vec![2, 2, 1, 1]));
        assert_eq!(Partition::rectangle(2, 3), Partition::new(vec![3, 3]));
        assert_eq!(Partition::rectangle(2, 0), Partition::empty());
    }
}
