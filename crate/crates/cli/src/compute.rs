use espalier_core::families::{
    height_volume_table, multivolume_counts, quasi_espalier_series, quasi_pyramid_series,
    recurrence_table, volume_series,
};
use espalier_core::genfunc::{
    directed_plateau_counts, hcv_polyomino_counts, plateau_polycube_counts, volume_totals,
    VolumeHeightCounts,
};
use espalier_core::{Family, Partition};

use crate::{CliError, GroupBy, SeqFamily};

/// Largest volume accepted per family, to keep runs at desk scale.
pub fn volume_guard(family: SeqFamily) -> u32 {
    match family {
        SeqFamily::Espalier | SeqFamily::Pyramid => 40,
        SeqFamily::QuasiEspalier | SeqFamily::QuasiPyramidLimit => 30,
        SeqFamily::Plateau => 16,
        SeqFamily::PlateauDirected | SeqFamily::HcvPolyomino => 40,
    }
}

/// Ambient dimension after defaults and family restrictions.
pub fn resolve_dim(family: SeqFamily, dim: Option<u32>) -> Result<u32, CliError> {
    let fixed = match family {
        SeqFamily::HcvPolyomino => Some(2),
        SeqFamily::QuasiEspalier | SeqFamily::QuasiPyramidLimit | SeqFamily::Plateau => Some(3),
        _ => None,
    };
    let min = match family {
        SeqFamily::PlateauDirected => 2,
        _ => 1,
    };
    match (fixed, dim) {
        (Some(f), Some(d)) if d != f => Err(CliError::Usage(format!(
            "{} is only defined in dimension {f}",
            family.name()
        ))),
        (Some(f), _) => Ok(f),
        (None, Some(d)) if d < min => Err(CliError::Usage(format!(
            "--dim must be at least {min} for {}",
            family.name()
        ))),
        (None, d) => Ok(d.unwrap_or(3)),
    }
}

fn check_volume(family: SeqFamily, v: u32) -> Result<(), CliError> {
    let guard = volume_guard(family);
    if v == 0 {
        return Err(CliError::Usage("volume must be at least 1".into()));
    }
    if v > guard {
        return Err(CliError::Usage(format!(
            "volume {v} exceeds the limit of {guard} for {}",
            family.name()
        )));
    }
    Ok(())
}

fn by_height(family: SeqFamily, max_volume: u32, dim: u32) -> Result<VolumeHeightCounts, CliError> {
    Ok(match family {
        SeqFamily::PlateauDirected => directed_plateau_counts(max_volume, dim - 1)?,
        SeqFamily::Plateau => plateau_polycube_counts(max_volume)?,
        SeqFamily::HcvPolyomino => hcv_polyomino_counts(max_volume)?,
        _ => unreachable!("no height table for {}", family.name()),
    })
}

/// Counts for volumes `1..=max_volume`.
pub fn sequence(family: SeqFamily, max_volume: u32, dim: u32) -> Result<Vec<i64>, CliError> {
    check_volume(family, max_volume)?;
    Ok(match family {
        SeqFamily::Espalier => volume_series(Family::Espalier, dim - 1, max_volume)?.as_slice().to_vec(),
        SeqFamily::Pyramid => volume_series(Family::Pyramid, dim - 1, max_volume)?.as_slice().to_vec(),
        SeqFamily::QuasiEspalier => quasi_espalier_series(max_volume)?.as_slice().to_vec(),
        SeqFamily::QuasiPyramidLimit => quasi_pyramid_series(max_volume)?.limit.as_slice().to_vec(),
        _ => volume_totals(&by_height(family, max_volume, dim)?, max_volume)?,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RowKey {
    Height,
    Multivolume(Partition),
    Plateau { i: u32, j: u32 },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Row {
    pub volume: u32,
    pub height: u32,
    pub key: RowKey,
    pub count: i64,
}

/// Rows ordered by volume, then height, then colex partition (or top
/// plateau dimensions).
pub fn table(
    family: SeqFamily,
    volume: u32,
    group_by: GroupBy,
    up_to: bool,
    dim: u32,
) -> Result<Vec<Row>, CliError> {
    check_volume(family, volume)?;
    let lowest = if up_to { 1 } else { volume };
    let unsupported = || {
        CliError::Usage(format!(
            "grouping by {} is not available for {}",
            group_by.name(),
            family.name()
        ))
    };
    let mut rows = Vec::new();
    match (group_by, family.stacked()) {
        (GroupBy::Height, Some(stacked)) => {
            for ((v, h), count) in height_volume_table(stacked, dim - 1, volume)? {
                if v >= lowest {
                    rows.push(Row { volume: v, height: h as u32, key: RowKey::Height, count });
                }
            }
        }
        (GroupBy::Height, None) => {
            if matches!(family, SeqFamily::QuasiEspalier | SeqFamily::QuasiPyramidLimit) {
                return Err(unsupported());
            }
            for ((v, h), count) in by_height(family, volume, dim)? {
                if v >= lowest && h <= v {
                    rows.push(Row { volume: v, height: h, key: RowKey::Height, count });
                }
            }
        }
        (GroupBy::Multivolume, Some(stacked)) => {
            for v in lowest..=volume {
                for (lambda, count) in multivolume_counts(stacked, dim - 1, v)? {
                    let height = lambda.height() as u32;
                    rows.push(Row { volume: v, height, key: RowKey::Multivolume(lambda), count });
                }
            }
        }
        (GroupBy::PlateauDims, Some(stacked)) => {
            if dim != 3 {
                return Err(CliError::Usage(
                    "grouping by plateau dimensions needs --dim 3".into(),
                ));
            }
            for ((i, j, h, v), count) in recurrence_table(stacked, volume)?.entries() {
                if v >= lowest {
                    rows.push(Row { volume: v, height: h, key: RowKey::Plateau { i, j }, count });
                }
            }
        }
        _ => return Err(unsupported()),
    }
    rows.sort_by(|a, b| {
        (a.volume, a.height)
            .cmp(&(b.volume, b.height))
            .then_with(|| match (&a.key, &b.key) {
                (RowKey::Multivolume(x), RowKey::Multivolume(y)) => x.colex_cmp(y),
                (RowKey::Plateau { i, j }, RowKey::Plateau { i: k, j: l }) => (i, j).cmp(&(k, l)),
                _ => std::cmp::Ordering::Equal,
            })
    });
    Ok(rows)
}
