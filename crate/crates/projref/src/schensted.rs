//! Row insertion and its refinement to colored and projective groups.
//!
//! For the full wreath quotients G(r,p,1,n) the correspondence splits an
//! element into r two-line arrays, one per color, and inserts each into its
//! own tableau component; the insertion and recording tuples share a shape
//! in Fer(r,p,n).  For a proper quotient G(r,p,q,n) the construction is
//! applied to every coloring in the scalar coset, which produces a C_q
//! orbit of tableau pairs; the orbit is reported by its lexicographically
//! least pair.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::group::{Element, GroupParams};
use crate::tableaux::{MultiShape, MultiTableau, ShapeClass};

/// Inserts `value` by row bumping and returns the row where a new cell
/// appeared.
fn insert(rows: &mut Vec<Vec<usize>>, mut value: usize) -> usize {
    for (idx, row) in rows.iter_mut().enumerate() {
        let spot = row.partition_point(|&x| x < value);
        if spot == row.len() {
            row.push(value);
            return idx;
        }
        std::mem::swap(&mut row[spot], &mut value);
    }
    rows.push(vec![value]);
    rows.len() - 1
}

/// Reverse bumping from the end of `row`; returns the value expelled from
/// the first row.
fn uninsert(rows: &mut Vec<Vec<usize>>, row: usize) -> usize {
    let mut value = rows[row].pop().unwrap();
    if rows[row].is_empty() {
        rows.pop();
    }
    for idx in (0..row).rev() {
        let spot = rows[idx].partition_point(|&x| x < value) - 1;
        std::mem::swap(&mut rows[idx][spot], &mut value);
    }
    value
}

/// Row-inserts a two-line array with strictly increasing top line and
/// distinct bottom entries; returns the insertion and recording rows.
pub fn insert_biword(
    tops: &[usize],
    bottoms: &[usize],
) -> (Vec<Vec<usize>>, Vec<Vec<usize>>) {
    debug_assert_eq!(tops.len(), bottoms.len());
    let mut p: Vec<Vec<usize>> = Vec::new();
    let mut q: Vec<Vec<usize>> = Vec::new();
    for (&top, &bottom) in tops.iter().zip(bottoms) {
        let row = insert(&mut p, bottom);
        if row == q.len() {
            q.push(Vec::new());
        }
        q[row].push(top);
    }
    (p, q)
}

/// Recovers the two-line array from a same-shape pair of components.
fn extract_biword(
    p_rows: &[Vec<usize>],
    q_rows: &[Vec<usize>],
) -> Result<(Vec<usize>, Vec<usize>)> {
    if p_rows.iter().map(Vec::len).collect::<Vec<_>>()
        != q_rows.iter().map(Vec::len).collect::<Vec<_>>()
    {
        return Err(Error::Malformed(
            "insertion and recording components differ in shape".into(),
        ));
    }
    let mut p = p_rows.to_vec();
    let mut cells: Vec<(usize, usize, usize)> = Vec::new();
    for (row_idx, row) in q_rows.iter().enumerate() {
        for (col_idx, &top) in row.iter().enumerate() {
            cells.push((top, row_idx, col_idx));
        }
    }
    cells.sort_unstable();
    let mut tops = Vec::with_capacity(cells.len());
    let mut bottoms = Vec::with_capacity(cells.len());
    for &(top, row_idx, col_idx) in cells.iter().rev() {
        if p[row_idx].len() != col_idx + 1 {
            return Err(Error::Malformed(
                "recording entries do not trace a growth sequence".into(),
            ));
        }
        let bottom = uninsert(&mut p, row_idx);
        tops.push(top);
        bottoms.push(bottom);
    }
    tops.reverse();
    bottoms.reverse();
    Ok((tops, bottoms))
}

/// The colored correspondence on a full wreath quotient G(r,p,1,n): the
/// element's positions of color j, paired with their images, are inserted
/// into component j.  Returns (insertion, recording).
pub fn stanton_white(g: &Element) -> Result<(MultiTableau, MultiTableau)> {
    let params = g.params();
    if params.q != 1 {
        return Err(Error::InvalidParams(format!(
            "colored insertion needs q = 1, got {params}"
        )));
    }
    Ok(stanton_white_raw(params.r, g.perm(), g.colors()))
}

fn stanton_white_raw(r: usize, perm: &[usize], colors: &[usize]) -> (MultiTableau, MultiTableau) {
    let mut p = vec![Vec::new(); r];
    let mut q = vec![Vec::new(); r];
    for color in 0..r {
        let mut tops = Vec::new();
        let mut bottoms = Vec::new();
        for (i, (&image, &c)) in perm.iter().zip(colors).enumerate() {
            if c == color {
                tops.push(i + 1);
                bottoms.push(image + 1);
            }
        }
        let (pc, qc) = insert_biword(&tops, &bottoms);
        p[color] = pc;
        q[color] = qc;
    }
    (MultiTableau { components: p }, MultiTableau { components: q })
}

/// Inverse of `stanton_white`: rebuilds the element of `params` from a
/// same-shape tableau pair.
pub fn stanton_white_inverse(
    insertion: &MultiTableau,
    recording: &MultiTableau,
    params: GroupParams,
) -> Result<Element> {
    if params.q != 1 {
        return Err(Error::InvalidParams(format!(
            "colored insertion needs q = 1, got {params}"
        )));
    }
    if insertion.colors() != params.r || recording.colors() != params.r {
        return Err(Error::Malformed(format!(
            "tableau pair needs {} components",
            params.r
        )));
    }
    insertion.positions()?;
    recording.positions()?;
    let n = params.n;
    if insertion.size() != n || recording.size() != n {
        return Err(Error::Malformed(format!("tableau pair needs {n} entries")));
    }
    let mut sigma = vec![0usize; n];
    let mut colors = vec![0i64; n];
    for color in 0..params.r {
        let (tops, bottoms) =
            extract_biword(&insertion.components[color], &recording.components[color])?;
        for (&top, &bottom) in tops.iter().zip(&bottoms) {
            sigma[top - 1] = bottom;
            colors[top - 1] = color as i64;
        }
    }
    Element::from_one_based(params, &sigma, &colors)
}

/// The image of an element of G(r,p,q,n) under the projective
/// correspondence: a C_q orbit of same-shape tableau pairs, reported by its
/// lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ProjectivePair {
    pub insertion: MultiTableau,
    pub recording: MultiTableau,
    pub cyclic_order: usize,
}

impl ProjectivePair {
    pub fn shape(&self) -> MultiShape {
        self.insertion.shape()
    }

    pub fn shape_class(&self) -> ShapeClass {
        ShapeClass::of(&self.insertion.shape(), self.cyclic_order)
            .expect("orbit representative has compatible cyclic order")
    }
}

/// Applies the colored correspondence to every coloring in the scalar coset
/// and canonicalizes the resulting pair orbit.
pub fn projective_rs(g: &Element) -> Result<ProjectivePair> {
    let params = g.params();
    let step = params.shift_step();
    let mut best: Option<(MultiTableau, MultiTableau)> = None;
    for j in 0..params.q {
        let colors: Vec<usize> = g
            .colors()
            .iter()
            .map(|&c| (c + j * step) % params.r)
            .collect();
        let pair = stanton_white_raw(params.r, g.perm(), &colors);
        if best.as_ref().map_or(true, |b| pair < *b) {
            best = Some(pair);
        }
    }
    let (insertion, recording) = best.unwrap();
    Ok(ProjectivePair { insertion, recording, cyclic_order: params.q })
}

/// Inverse of `projective_rs`: any member of the pair orbit determines the
/// element.
pub fn projective_rs_inverse(
    insertion: &MultiTableau,
    recording: &MultiTableau,
    params: GroupParams,
) -> Result<Element> {
    let wreath = GroupParams::new(params.r, params.p, 1, params.n)?;
    let lifted = stanton_white_inverse(insertion, recording, wreath)?;
    let colors: Vec<i64> = lifted.colors().iter().map(|&c| c as i64).collect();
    Element::canonicalize(params, lifted.perm().to_vec(), &colors)
}
