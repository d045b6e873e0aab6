//! Sparse column reduction over GF(2).
//!
//! Columns are sorted, duplicate-free row index lists; the pivot of a column
//! is its largest row index.

use alloc::vec::Vec;

const NONE: u32 = u32::MAX;

/// Symmetric difference of two sorted index lists, written into `out`.
pub(crate) fn xor_sorted(a: &[u32], b: &[u32], out: &mut Vec<u32>) {
    out.clear();
    out.reserve(a.len() + b.len());
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            core::cmp::Ordering::Less => {
                out.push(a[i]);
                i += 1;
            }
            core::cmp::Ordering::Greater => {
                out.push(b[j]);
                j += 1;
            }
            core::cmp::Ordering::Equal => {
                i += 1;
                j += 1;
            }
        }
    }
    out.extend_from_slice(&a[i..]);
    out.extend_from_slice(&b[j..]);
}

/// Incremental column echelon form with optional combination tracking.
///
/// Every stored column has a distinct pivot. When tracking is enabled each
/// stored column also remembers which tagged input columns it is a sum of.
pub(crate) struct Reducer {
    pivot_col: Vec<u32>,
    columns: Vec<Vec<u32>>,
    combos: Vec<Vec<u32>>,
    track: bool,
    scratch: Vec<u32>,
}

impl Reducer {
    pub(crate) fn new(rows: usize, track: bool) -> Self {
        Self {
            pivot_col: alloc::vec![NONE; rows],
            columns: Vec::new(),
            combos: Vec::new(),
            track,
            scratch: Vec::new(),
        }
    }

    pub(crate) fn rank(&self) -> usize {
        self.columns.len()
    }

    /// Reduces `col` against the stored columns. Returns the remainder and,
    /// when tracking, the combination of tags that was added to it.
    pub(crate) fn reduce(&mut self, mut col: Vec<u32>, mut combo: Vec<u32>) -> (Vec<u32>, Vec<u32>) {
        let mut scratch = core::mem::take(&mut self.scratch);
        while let Some(&low) = col.last() {
            let slot = self.pivot_col[low as usize];
            if slot == NONE {
                break;
            }
            let slot = slot as usize;
            xor_sorted(&col, &self.columns[slot], &mut scratch);
            core::mem::swap(&mut col, &mut scratch);
            if self.track && !self.combos[slot].is_empty() {
                xor_sorted(&combo, &self.combos[slot], &mut scratch);
                core::mem::swap(&mut combo, &mut scratch);
            }
        }
        self.scratch = scratch;
        (col, combo)
    }

    /// Adds a column. Returns `true` when it was independent of the stored
    /// ones (the rank grew).
    pub(crate) fn insert(&mut self, col: Vec<u32>, tag: Option<u32>) -> bool {
        let combo = match (self.track, tag) {
            (true, Some(t)) => alloc::vec![t],
            _ => Vec::new(),
        };
        let (col, combo) = self.reduce(col, combo);
        match col.last() {
            None => false,
            Some(&low) => {
                self.pivot_col[low as usize] = self.columns.len() as u32;
                self.columns.push(col);
                self.combos.push(combo);
                true
            }
        }
    }

    /// Rewrites tag `p` as the sum of `with` (a sorted list containing `p`)
    /// in every stored combination.
    pub(crate) fn substitute_tag(&mut self, p: u32, with: &[u32]) {
        let mut scratch = core::mem::take(&mut self.scratch);
        for combo in self.combos.iter_mut().filter(|c| c.binary_search(&p).is_ok()) {
            xor_sorted(combo, with, &mut scratch);
            core::mem::swap(combo, &mut scratch);
        }
        self.scratch = scratch;
    }
}
