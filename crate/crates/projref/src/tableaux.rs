//! Tuples of Ferrers diagrams, their cyclic shift classes, and standard
//! multitableaux.
//!
//! Fer(r,p,n) is the set of r-tuples of partitions with n cells in total
//! whose color weight (sum of component index times component size) is
//! divisible by p.  The scalar group C_q acts by cyclically shifting the
//! component indices by r/q; shape and tableau classes are represented by
//! their lexicographically least orbit members.  Component indices are
//! 0-based everywhere; tableau entries are 1-based.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::group::GroupParams;
use crate::partitions::{multinomial, partitions_of, Partition};
use crate::stats::{profile_from_colored_word, StatProfile};

/// An r-tuple of partitions.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiShape {
    pub components: Vec<Partition>,
}

impl MultiShape {
    pub fn new(components: Vec<Partition>) -> Result<Self> {
        if components.is_empty() {
            return Err(Error::Malformed("a shape tuple needs r >= 1 components".into()));
        }
        Ok(MultiShape { components })
    }

    pub fn empty(r: usize) -> Self {
        MultiShape { components: vec![Partition::empty(); r] }
    }

    /// Number of components r.
    pub fn colors(&self) -> usize {
        self.components.len()
    }

    /// Total number of cells.
    pub fn size(&self) -> usize {
        self.components.iter().map(|p| p.size()).sum()
    }

    /// Sum over components of (index * size), the color weight.
    pub fn color_weight(&self) -> usize {
        self.components
            .iter()
            .enumerate()
            .map(|(i, p)| i * p.size())
            .sum()
    }

    /// Cyclic component shift: component i of the result is component
    /// (i + step) mod r of the input.
    pub fn shift(&self, step: usize) -> MultiShape {
        let r = self.colors();
        MultiShape {
            components: (0..r)
                .map(|i| self.components[(i + step) % r].clone())
                .collect(),
        }
    }

    /// Relabels component j as component d*j mod r, for d coprime to r:
    /// the index action of the field automorphism sending the r-th root of
    /// unity to its d-th power.
    pub fn galois_twist(&self, d: usize) -> Result<MultiShape> {
        let r = self.colors();
        if crate::gcd(d, r) != 1 {
            return Err(Error::NotCoprime { d, r });
        }
        let mut components = vec![Partition::empty(); r];
        for (j, comp) in self.components.iter().enumerate() {
            components[(d * j) % r] = comp.clone();
        }
        Ok(MultiShape { components })
    }

    /// The shape of the conjugate representation: component indices are
    /// negated mod r.
    pub fn conjugate(&self) -> MultiShape {
        let r = self.colors();
        if r == 1 {
            return self.clone();
        }
        self.galois_twist(r - 1).expect("r-1 is coprime to r")
    }

    pub fn is_in_fer(&self, r: usize, p: usize, n: usize) -> bool {
        self.colors() == r && self.size() == n && self.color_weight() % p == 0
    }
}

impl std::fmt::Display for MultiShape {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let body = self
            .components
            .iter()
            .map(|p| p.to_string())
            .collect::<Vec<_>>()
            .join(", ");
        write!(f, "[{body}]")
    }
}

/// All shapes in Fer(r,p,n), ordered deterministically.
pub fn enumerate_fer(r: usize, p: usize, n: usize) -> Vec<MultiShape> {
    let mut out = Vec::new();
    let mut sizes = vec![0usize; r];
    fn rec(
        slot: usize,
        remaining: usize,
        r: usize,
        p: usize,
        sizes: &mut Vec<usize>,
        out: &mut Vec<MultiShape>,
    ) {
        if slot == r {
            if remaining == 0 {
                let weight: usize = sizes.iter().enumerate().map(|(i, &s)| i * s).sum();
                if weight % p == 0 {
                    // Cartesian product of partitions of each size.
                    let choices: Vec<Vec<Partition>> =
                        sizes.iter().map(|&s| partitions_of(s)).collect();
                    let mut pick = vec![0usize; r];
                    loop {
                        out.push(MultiShape {
                            components: pick
                                .iter()
                                .enumerate()
                                .map(|(i, &j)| choices[i][j].clone())
                                .collect(),
                        });
                        let mut carry = r;
                        for i in (0..r).rev() {
                            pick[i] += 1;
                            if pick[i] < choices[i].len() {
                                carry = i;
                                break;
                            }
                            pick[i] = 0;
                        }
                        if carry == r {
                            break;
                        }
                    }
                }
            }
            return;
        }
        for s in 0..=remaining {
            sizes[slot] = s;
            rec(slot + 1, remaining - s, r, p, sizes, out);
        }
        sizes[slot] = 0;
    }
    rec(0, n, r, p, &mut sizes, &mut out);
    out
}

/// A C_q-orbit of shapes, stored by its lexicographically least member.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ShapeClass {
    pub rep: MultiShape,
    /// The order q of the shifting cyclic group.
    pub cyclic_order: usize,
    /// Number of shifts fixing the shape tuple.
    pub stabilizer: usize,
}

impl ShapeClass {
    /// Canonicalizes a shape under the C_q shift action; requires q to
    /// divide the number of components.
    pub fn of(shape: &MultiShape, q: usize) -> Result<ShapeClass> {
        let r = shape.colors();
        if q == 0 || r % q != 0 {
            return Err(Error::InvalidParams(format!(
                "cyclic order {q} does not divide r = {r}"
            )));
        }
        let step = r / q;
        let mut rep = shape.clone();
        let mut stabilizer = 0;
        for j in 0..q {
            let shifted = shape.shift(j * step);
            if shifted == *shape {
                stabilizer += 1;
            }
            if shifted < rep {
                rep = shifted;
            }
        }
        Ok(ShapeClass { rep, cyclic_order: q, stabilizer })
    }

    pub fn shift_step(&self) -> usize {
        self.rep.colors() / self.cyclic_order
    }

    /// Number of distinct shapes in the orbit.
    pub fn orbit_size(&self) -> usize {
        self.cyclic_order / self.stabilizer
    }

    /// The orbit itself, starting at the representative.
    pub fn orbit(&self) -> Vec<MultiShape> {
        let step = self.shift_step();
        (0..self.orbit_size())
            .map(|j| self.rep.shift(j * step))
            .collect()
    }
}

impl std::fmt::Display for ShapeClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} (mod C_{})", self.rep, self.cyclic_order)
    }
}

/// The classes of Fer(r,p,n) under C_q, for valid parameters (r,p,q,n).
pub fn enumerate_fer_classes(r: usize, p: usize, q: usize, n: usize) -> Result<Vec<ShapeClass>> {
    GroupParams::new(r, p, q, n)?;
    let mut reps = BTreeSet::new();
    for shape in enumerate_fer(r, p, n) {
        reps.insert(ShapeClass::of(&shape, q)?);
    }
    Ok(reps.into_iter().collect())
}

/// A standard filling of a shape tuple: entries 1..n, rows increase
/// rightward, columns increase downward.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct MultiTableau {
    pub components: Vec<Vec<Vec<usize>>>,
}

impl MultiTableau {
    pub fn shape(&self) -> MultiShape {
        MultiShape {
            components: self
                .components
                .iter()
                .map(|rows| Partition::new(rows.iter().map(|row| row.len()).collect()))
                .collect(),
        }
    }

    pub fn colors(&self) -> usize {
        self.components.len()
    }

    pub fn size(&self) -> usize {
        self.components
            .iter()
            .map(|rows| rows.iter().map(|row| row.len()).sum::<usize>())
            .sum()
    }

    /// Checks standardness and returns (component, row) of each entry;
    /// index 0 of the result corresponds to entry 1.
    pub fn positions(&self) -> Result<Vec<(usize, usize)>> {
        let n = self.size();
        let mut pos = vec![None; n];
        for (comp_idx, rows) in self.components.iter().enumerate() {
            for (row_idx, row) in rows.iter().enumerate() {
                if row.is_empty() {
                    return Err(Error::Malformed("empty row in tableau".into()));
                }
                if row_idx > 0 && rows[row_idx - 1].len() < row.len() {
                    return Err(Error::Malformed(
                        "row lengths must weakly decrease".into(),
                    ));
                }
                for (col_idx, &entry) in row.iter().enumerate() {
                    if entry == 0 || entry > n {
                        return Err(Error::Malformed(format!(
                            "entry {entry} out of range 1..={n}"
                        )));
                    }
                    if pos[entry - 1].is_some() {
                        return Err(Error::Malformed(format!("entry {entry} repeats")));
                    }
                    if col_idx > 0 && row[col_idx - 1] >= entry {
                        return Err(Error::Malformed("rows must increase".into()));
                    }
                    if row_idx > 0 && rows[row_idx - 1][col_idx] >= entry {
                        return Err(Error::Malformed("columns must increase".into()));
                    }
                    pos[entry - 1] = Some((comp_idx, row_idx));
                }
            }
        }
        pos.into_iter()
            .map(|p| p.ok_or_else(|| Error::Malformed("missing entry".into())))
            .collect()
    }

    /// Cyclic component shift, compatible with `MultiShape::shift`.
    pub fn shift(&self, step: usize) -> MultiTableau {
        let r = self.colors();
        MultiTableau {
            components: (0..r)
                .map(|i| self.components[(i + step) % r].clone())
                .collect(),
        }
    }

    /// The lexicographically least tableau among the q shifts.
    pub fn class_rep(&self, q: usize) -> Result<MultiTableau> {
        let r = self.colors();
        if q == 0 || r % q != 0 {
            return Err(Error::InvalidParams(format!(
                "cyclic order {q} does not divide r = {r}"
            )));
        }
        let step = r / q;
        Ok((0..q).map(|j| self.shift(j * step)).min().unwrap())
    }
}

impl std::fmt::Display for MultiTableau {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let comps: Vec<String> = self
            .components
            .iter()
            .map(|rows| {
                let body: Vec<String> = rows
                    .iter()
                    .map(|row| {
                        row.iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(",")
                    })
                    .collect();
                format!("({})", body.join("/"))
            })
            .collect();
        write!(f, "[{}]", comps.join(" "))
    }
}

/// All standard fillings of one shape tuple.
pub fn enumerate_tableaux(shape: &MultiShape) -> Vec<MultiTableau> {
    let r = shape.colors();
    let n = shape.size();
    let mut filling: Vec<Vec<Vec<usize>>> = shape
        .components
        .iter()
        .map(|p| p.parts().iter().map(|&len| Vec::with_capacity(len)).collect())
        .collect();
    let mut out = Vec::new();
    fn rec(
        entry: usize,
        n: usize,
        r: usize,
        shape: &MultiShape,
        filling: &mut Vec<Vec<Vec<usize>>>,
        out: &mut Vec<MultiTableau>,
    ) {
        if entry > n {
            out.push(MultiTableau { components: filling.clone() });
            return;
        }
        for comp in 0..r {
            let target = &shape.components[comp];
            for row in 0..target.len() {
                let cur = filling[comp][row].len();
                let fits_row = cur < target.part(row);
                let fits_column = row == 0 || filling[comp][row - 1].len() > cur;
                if fits_row && fits_column {
                    filling[comp][row].push(entry);
                    rec(entry + 1, n, r, shape, filling, out);
                    filling[comp][row].pop();
                }
            }
        }
    }
    rec(1, n, r, shape, &mut filling, &mut out);
    out
}

/// Number of standard fillings, by hooks and a multinomial.
pub fn tableau_count(shape: &MultiShape) -> u128 {
    let sizes: Vec<usize> = shape.components.iter().map(|p| p.size()).collect();
    let mut count = multinomial(&sizes);
    for comp in &shape.components {
        count *= comp.tableau_count();
    }
    count
}

/// Number of C_q-classes of standard fillings over the orbit of shapes.
///
/// The shift action is free on standard fillings, so this is the per-shape
/// count divided by the stabilizer order.
pub fn class_tableau_count(class: &ShapeClass) -> u128 {
    let per_shape = tableau_count(&class.rep);
    assert_eq!(
        per_shape % class.stabilizer as u128,
        0,
        "free action must divide the tableau count"
    );
    per_shape / class.stabilizer as u128
}

/// Descent statistics of a standard multitableau.
///
/// The color of entry i is its 0-based component index; i is a homogeneous
/// descent when i+1 lives in the same component strictly below i.  `quot`
/// plays the role of q: the statistics are invariant under shifting
/// components by r/quot.
pub fn tableau_stats(t: &MultiTableau, quot: usize) -> Result<StatProfile> {
    let r = t.colors();
    if quot == 0 || r % quot != 0 {
        return Err(Error::InvalidParams(format!(
            "quotient order {quot} does not divide r = {r}"
        )));
    }
    let positions = t.positions()?;
    if positions.is_empty() {
        return Err(Error::Malformed("empty tableau".into()));
    }
    let colors: Vec<usize> = positions.iter().map(|&(c, _)| c).collect();
    let rank: Vec<i64> = positions.iter().map(|&(_, row)| -(row as i64)).collect();
    Ok(profile_from_colored_word(r, quot, &rank, &colors))
}
