//! Brute-force geometric enumeration of espaliers and pyramids as explicit
//! cell sets.
//!
//! Nothing here touches the convolution algebra: objects are built plateau
//! by plateau straight from the gluing rules, expanded to cells, and
//! deduplicated by set equality.

use std::collections::{BTreeSet, VecDeque};
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::families::Family;
use crate::partition::Partition;

/// Largest volume [`enumerate`] accepts.
pub const MAX_ORACLE_VOLUME: u32 = 10;
/// Largest `w + h` [`enumerate_quasi_espaliers`] accepts.
pub const MAX_QUASI_VOLUME: u32 = 12;

pub type Cell = (i32, i32, i32);

/// A finite set of lattice cells `(x, y, z)`, `x` being the level.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct CellSet(BTreeSet<Cell>);

impl CellSet {
    pub fn cells(&self) -> &BTreeSet<Cell> {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, cell: Cell) -> bool {
        self.0.contains(&cell)
    }

    /// Every cell reachable from every other through shared faces.
    pub fn is_face_connected(&self) -> bool {
        let Some(&start) = self.0.iter().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start]);
        let mut queue = VecDeque::from([start]);
        while let Some((x, y, z)) = queue.pop_front() {
            for n in [
                (x + 1, y, z),
                (x - 1, y, z),
                (x, y + 1, z),
                (x, y - 1, z),
                (x, y, z + 1),
                (x, y, z - 1),
            ] {
                if self.0.contains(&n) && seen.insert(n) {
                    queue.push_back(n);
                }
            }
        }
        seen.len() == self.0.len()
    }
}

impl FromIterator<Cell> for CellSet {
    fn from_iter<I: IntoIterator<Item = Cell>>(iter: I) -> Self {
        CellSet(iter.into_iter().collect())
    }
}

/// One horizontal rectangle of a stack.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Plateau {
    pub width_y: u32,
    pub width_z: u32,
    pub offset_y: u32,
    pub offset_z: u32,
}

impl Plateau {
    pub fn volume(&self) -> u32 {
        self.width_y * self.width_z
    }

    fn contains(&self, other: &Plateau) -> bool {
        other.offset_y >= self.offset_y
            && other.offset_z >= self.offset_z
            && other.offset_y + other.width_y <= self.offset_y + self.width_y
            && other.offset_z + other.width_z <= self.offset_z + self.width_z
    }
}

/// Plateaus listed from the bottom level upwards.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct RectangleStack {
    plateaus: Vec<Plateau>,
}

impl RectangleStack {
    /// Validates the pyramid rules: plateau 0 sits at the origin and each
    /// plateau lies inside the one below it.
    pub fn new(plateaus: Vec<Plateau>) -> Result<Self> {
        let valid = !plateaus.is_empty()
            && plateaus.iter().all(|p| p.width_y >= 1 && p.width_z >= 1)
            && plateaus[0].offset_y == 0
            && plateaus[0].offset_z == 0
            && plateaus.windows(2).all(|w| w[0].contains(&w[1]));
        if !valid {
            return Err(Error::OutOfRange("plateaus do not form a pyramid".into()));
        }
        Ok(RectangleStack { plateaus })
    }

    pub fn plateaus(&self) -> &[Plateau] {
        &self.plateaus
    }

    pub fn height(&self) -> usize {
        self.plateaus.len()
    }

    pub fn volume(&self) -> u32 {
        self.plateaus.iter().map(Plateau::volume).sum()
    }

    pub fn is_espalier(&self) -> bool {
        self.plateaus
            .iter()
            .all(|p| p.offset_y == 0 && p.offset_z == 0)
    }

    pub fn to_cells(&self) -> CellSet {
        let mut cells = BTreeSet::new();
        for (x, p) in self.plateaus.iter().enumerate() {
            for y in p.offset_y..p.offset_y + p.width_y {
                for z in p.offset_z..p.offset_z + p.width_z {
                    cells.insert((x as i32, y as i32, z as i32));
                }
            }
        }
        CellSet(cells)
    }
}

/// Every stack of the family with total volume `v`, plateaus generated
/// bottom-up: widths first, then offsets.
pub fn stacks(family: Family, v: u32) -> Vec<RectangleStack> {
    fn extend(
        family: Family,
        remaining: u32,
        current: &mut Vec<Plateau>,
        out: &mut Vec<RectangleStack>,
    ) {
        if remaining == 0 {
            out.push(RectangleStack {
                plateaus: current.clone(),
            });
            return;
        }
        let below = *current.last().expect("stack has a first plateau");
        for wy in 1..=below.width_y {
            for wz in 1..=below.width_z {
                if wy * wz > remaining {
                    break;
                }
                let (oy_range, oz_range) = match family {
                    Family::Espalier => (0..=0, 0..=0),
                    Family::Pyramid => (
                        below.offset_y..=below.offset_y + below.width_y - wy,
                        below.offset_z..=below.offset_z + below.width_z - wz,
                    ),
                };
                for oy in oy_range {
                    for oz in oz_range.clone() {
                        current.push(Plateau {
                            width_y: wy,
                            width_z: wz,
                            offset_y: oy,
                            offset_z: oz,
                        });
                        extend(family, remaining - wy * wz, current, out);
                        current.pop();
                    }
                }
            }
        }
    }

    let mut out = Vec::new();
    for wy in 1..=v {
        for wz in 1..=v / wy {
            let mut current = vec![Plateau {
                width_y: wy,
                width_z: wz,
                offset_y: 0,
                offset_z: 0,
            }];
            extend(family, v - wy * wz, &mut current, &mut out);
        }
    }
    out
}

/// Distinct cell sets of the family with volume `v ≤ MAX_ORACLE_VOLUME`.
pub fn enumerate(family: Family, v: u32) -> Result<BTreeSet<CellSet>> {
    if v > MAX_ORACLE_VOLUME {
        return Err(Error::GuardExceeded(format!(
            "volume {v} exceeds {MAX_ORACLE_VOLUME}"
        )));
    }
    Ok(enumerate_unguarded(family, v))
}

/// [`enumerate`] without the volume cap. Runtime grows quickly past 12.
pub fn enumerate_unguarded(family: Family, v: u32) -> BTreeSet<CellSet> {
    stacks(family, v).iter().map(RectangleStack::to_cells).collect()
}

/// Espaliers of volume `w + h` and height `h` with the column `(a, 0, 0)`
/// removed, kept at their original position.
pub fn enumerate_quasi_espaliers(w: u32, h: u32) -> Result<BTreeSet<CellSet>> {
    if w + h > MAX_QUASI_VOLUME {
        return Err(Error::GuardExceeded(format!(
            "w + h = {} exceeds {MAX_QUASI_VOLUME}",
            w + h
        )));
    }
    Ok(enumerate_quasi_espaliers_unguarded(w, h))
}

pub fn enumerate_quasi_espaliers_unguarded(w: u32, h: u32) -> BTreeSet<CellSet> {
    stacks(Family::Espalier, w + h)
        .iter()
        .filter(|s| s.height() == h as usize)
        .map(|s| {
            s.to_cells()
                .0
                .into_iter()
                .filter(|&(_, y, z)| (y, z) != (0, 0))
                .collect()
        })
        .collect()
}

/// Plateau volumes from the bottom up.
pub fn multivolume_of(stack: &RectangleStack) -> Partition {
    Partition::new(stack.plateaus.iter().map(Plateau::volume).collect())
        .expect("nested plateaus have weakly decreasing volumes")
}

/// `(λ_x, λ_y)`: the Ferrers diagrams seen along `y` (z-widths) and along
/// `z` (y-widths).
pub fn projections(stack: &RectangleStack) -> Result<(Partition, Partition)> {
    if !stack.is_espalier() {
        return Err(Error::OutOfRange("projections need an espalier".into()));
    }
    let lx = stack.plateaus.iter().map(|p| p.width_z).collect();
    let ly = stack.plateaus.iter().map(|p| p.width_y).collect();
    Ok((Partition::new(lx)?, Partition::new(ly)?))
}

/// Inverse of [`projections`].
pub fn espalier_from_projections(lx: &Partition, ly: &Partition) -> Result<RectangleStack> {
    if lx.height() != ly.height() {
        return Err(Error::HeightMismatch {
            left: lx.height(),
            right: ly.height(),
        });
    }
    RectangleStack::new(
        lx.parts()
            .iter()
            .zip(ly.parts())
            .map(|(&z, &y)| Plateau {
                width_y: y,
                width_z: z,
                offset_y: 0,
                offset_z: 0,
            })
            .collect(),
    )
}

/// Number of ways to place rectangles of the given `(width_y, width_z)`
/// dimensions (bottom first) as a pyramid, counted by enumerating offsets.
pub fn placement_count(dims: &[(u32, u32)]) -> u64 {
    fn rec(dims: &[(u32, u32)], below: Plateau) -> u64 {
        let Some((&(wy, wz), rest)) = dims.split_first() else {
            return 1;
        };
        if wy > below.width_y || wz > below.width_z {
            return 0;
        }
        let mut total = 0;
        for oy in below.offset_y..=below.offset_y + below.width_y - wy {
            for oz in below.offset_z..=below.offset_z + below.width_z - wz {
                let p = Plateau {
                    width_y: wy,
                    width_z: wz,
                    offset_y: oy,
                    offset_z: oz,
                };
                total += rec(rest, p);
            }
        }
        total
    }
    let Some((&(wy, wz), rest)) = dims.split_first() else {
        return 0;
    };
    rec(
        rest,
        Plateau {
            width_y: wy,
            width_z: wz,
            offset_y: 0,
            offset_z: 0,
        },
    )
}

/// Decides membership of a cell set in the family directly from the
/// gluing rules, without reference to any stack.
pub fn satisfies_family(cells: &CellSet, family: Family) -> bool {
    let Some(top) = cells.0.iter().map(|c| c.0).max() else {
        return false;
    };
    if cells.0.iter().any(|c| c.0 < 0) {
        return false;
    }
    let level = |x: i32| -> Vec<(i32, i32)> {
        cells.0.iter().filter(|c| c.0 == x).map(|c| (c.1, c.2)).collect()
    };
    let base = level(0);
    if !base.contains(&(0, 0)) || base.iter().any(|&(y, z)| y < 0 || z < 0) {
        return false;
    }
    for x in 0..=top {
        let cur = level(x);
        if cur.is_empty() || !is_rectangle(&cur) {
            return false;
        }
        if family == Family::Espalier && !cur.contains(&(0, 0)) {
            return false;
        }
        if x > 0 && !cur.iter().all(|&(y, z)| cells.contains((x - 1, y, z))) {
            return false;
        }
    }
    true
}

fn is_rectangle(cells: &[(i32, i32)]) -> bool {
    let ys = cells.iter().map(|c| c.0);
    let zs = cells.iter().map(|c| c.1);
    let (y0, y1) = (ys.clone().min().unwrap(), ys.max().unwrap());
    let (z0, z1) = (zs.clone().min().unwrap(), zs.max().unwrap());
    ((y1 - y0 + 1) * (z1 - z0 + 1)) as usize == cells.len()
}

/// Line-oriented dump: one `x y z` per line, figures separated by a blank
/// line.
pub fn dump<'a>(sets: impl IntoIterator<Item = &'a CellSet>) -> String {
    let mut out = String::new();
    for (k, set) in sets.into_iter().enumerate() {
        if k > 0 {
            out.push('\n');
        }
        for &(x, y, z) in &set.0 {
            let _ = writeln!(out, "{x} {y} {z}");
        }
    }
    out
}
