use std::io::Write;

use serde_json::{json, Map, Value};

use crate::compute::{Row, RowKey};
use crate::{io_error, CliError, Format, GroupBy, SeqFamily};

/// Largest magnitude that survives a round trip through an IEEE double.
const JSON_SAFE: i64 = (1 << 53) - 1;

fn json_int(x: i64) -> Result<Value, CliError> {
    if x.abs() > JSON_SAFE {
        return Err(CliError::Overflow(format!("{x} exceeds the JSON integer limit 2^53 - 1")));
    }
    Ok(json!(x))
}

fn write_json(out: &mut impl Write, family: SeqFamily, dim: u32, params: Value, data: Vec<Value>) -> Result<(), CliError> {
    // serde_json's default map is ordered, which gives canonical key order
    let doc = json!({ "family": family.name(), "dim": dim, "params": params, "data": data });
    let text = serde_json::to_string_pretty(&doc).map_err(io_error)?;
    writeln!(out, "{text}").map_err(io_error)
}

fn write_csv(out: &mut impl Write, header: &[String], records: &[Vec<String>]) -> Result<(), CliError> {
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header).map_err(io_error)?;
    for r in records {
        w.write_record(r).map_err(io_error)?;
    }
    w.flush().map_err(io_error)
}

pub fn sequence(
    out: &mut impl Write,
    family: SeqFamily,
    dim: u32,
    max_volume: u32,
    counts: &[i64],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            let line: Vec<String> = counts.iter().map(i64::to_string).collect();
            writeln!(out, "{}", line.join(",")).map_err(io_error)
        }
        Format::Csv => {
            let records: Vec<Vec<String>> = counts
                .iter()
                .enumerate()
                .map(|(i, c)| vec![(i + 1).to_string(), c.to_string()])
                .collect();
            write_csv(out, &["volume".into(), "count".into()], &records)
        }
        Format::Json => {
            let data = counts
                .iter()
                .enumerate()
                .map(|(i, &c)| Ok(json!({ "volume": i + 1, "count": json_int(c)? })))
                .collect::<Result<Vec<_>, CliError>>()?;
            write_json(out, family, dim, json!({ "max_volume": max_volume }), data)
        }
    }
}

#[allow(clippy::too_many_arguments)]
pub fn table(
    out: &mut impl Write,
    family: SeqFamily,
    dim: u32,
    volume: u32,
    group_by: GroupBy,
    up_to: bool,
    rows: &[Row],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Text => {
            for r in rows {
                let label = match &r.key {
                    RowKey::Height => format!("(v={},h={})", r.volume, r.height),
                    RowKey::Multivolume(lambda) => lambda.to_string(),
                    RowKey::Plateau { i, j } => format!("(v={},h={},top={i}x{j})", r.volume, r.height),
                };
                writeln!(out, "{label}:{}", r.count).map_err(io_error)?;
            }
            Ok(())
        }
        Format::Csv => {
            let widest = rows.iter().map(|r| r.height as usize).max().unwrap_or(0);
            let mut header = vec!["volume".to_string(), "height".to_string()];
            match group_by {
                GroupBy::Height => {}
                GroupBy::Multivolume => header.extend((1..=widest).map(|k| format!("v{k}"))),
                GroupBy::PlateauDims => header.extend(["i".to_string(), "j".to_string()]),
            }
            header.push("count".into());
            let records: Vec<Vec<String>> = rows
                .iter()
                .map(|r| {
                    let mut rec = vec![r.volume.to_string(), r.height.to_string()];
                    match &r.key {
                        RowKey::Height => {}
                        RowKey::Multivolume(lambda) => {
                            rec.extend(lambda.parts().iter().map(u32::to_string));
                            rec.resize(2 + widest, String::new());
                        }
                        RowKey::Plateau { i, j } => rec.extend([i.to_string(), j.to_string()]),
                    }
                    rec.push(r.count.to_string());
                    rec
                })
                .collect();
            write_csv(out, &header, &records)
        }
        Format::Json => {
            let data = rows
                .iter()
                .map(|r| {
                    let mut obj = Map::new();
                    obj.insert("volume".into(), json!(r.volume));
                    obj.insert("height".into(), json!(r.height));
                    match &r.key {
                        RowKey::Height => {}
                        RowKey::Multivolume(lambda) => {
                            obj.insert("multivolume".into(), json!(lambda.parts()));
                        }
                        RowKey::Plateau { i, j } => {
                            obj.insert("i".into(), json!(i));
                            obj.insert("j".into(), json!(j));
                        }
                    }
                    obj.insert("count".into(), json_int(r.count)?);
                    Ok(Value::Object(obj))
                })
                .collect::<Result<Vec<_>, CliError>>()?;
            let params = json!({ "volume": volume, "group_by": group_by.name(), "up_to": up_to });
            write_json(out, family, dim, params, data)
        }
    }
}
