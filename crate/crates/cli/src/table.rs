//! `table`: exact counts over a range of sizes, as CSV or JSON lines.

use oddtrees::closed_forms::{
    odd_trees_bipartite, odd_trees_complete, tau_bipartite, tau_complete,
};
use oddtrees::Count;
use serde::{Deserialize, Serialize};

use crate::args::{TableFamily, TableFormat};
use crate::CliError;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SizeRow {
    pub n: u32,
    pub count: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairRow {
    pub m: u32,
    pub n: u32,
    pub count: Count,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum TableRow {
    Pair(PairRow),
    Size(SizeRow),
}

impl TableFamily {
    fn is_bipartite(self) -> bool {
        matches!(self, TableFamily::Bipartite | TableFamily::OddBipartite)
    }
}

/// One row per size in `from..=to`; bipartite families range over every
/// pair `(m, n)` in that square, in lexicographic order.
pub fn build_table(family: TableFamily, from: u32, to: u32) -> Result<Vec<TableRow>, CliError> {
    if from == 0 || from > to {
        return Err(CliError::Usage(format!(
            "invalid range {from}..{to}: bounds must be positive and from <= to"
        )));
    }
    let mut rows = Vec::new();
    for a in from..=to {
        if family.is_bipartite() {
            for b in from..=to {
                let count = match family {
                    TableFamily::Bipartite => tau_bipartite(a, b)?,
                    _ => odd_trees_bipartite(a, b)?,
                };
                rows.push(TableRow::Pair(PairRow { m: a, n: b, count }));
            }
        } else {
            let count = match family {
                TableFamily::Complete => tau_complete(a)?,
                _ => odd_trees_complete(a)?,
            };
            rows.push(TableRow::Size(SizeRow { n: a, count }));
        }
    }
    Ok(rows)
}

pub fn render_table(rows: &[TableRow], format: TableFormat) -> Result<String, CliError> {
    match format {
        TableFormat::Csv => {
            let mut writer = csv::Writer::from_writer(Vec::new());
            let header: &[&str] = match rows.first() {
                Some(TableRow::Pair(_)) => &["m", "n", "count"],
                _ => &["n", "count"],
            };
            writer.write_record(header)?;
            for row in rows {
                match row {
                    TableRow::Pair(r) => writer.serialize((r.m, r.n, r.count.to_string()))?,
                    TableRow::Size(r) => writer.serialize((r.n, r.count.to_string()))?,
                }
            }
            let bytes = writer
                .into_inner()
                .map_err(|e| CliError::Io(e.into_error()))?;
            Ok(String::from_utf8(bytes).expect("csv output is ASCII"))
        }
        TableFormat::Jsonl => {
            let mut out = String::new();
            for row in rows {
                out.push_str(&serde_json::to_string(row)?);
                out.push('\n');
            }
            Ok(out)
        }
    }
}

pub fn parse_table(text: &str, format: TableFormat) -> Result<Vec<TableRow>, CliError> {
    match format {
        TableFormat::Csv => {
            let mut reader = csv::Reader::from_reader(text.as_bytes());
            if reader.headers()?.len() == 3 {
                reader
                    .deserialize()
                    .map(|r| Ok(TableRow::Pair(r?)))
                    .collect()
            } else {
                reader
                    .deserialize()
                    .map(|r| Ok(TableRow::Size(r?)))
                    .collect()
            }
        }
        TableFormat::Jsonl => text
            .lines()
            .filter(|l| !l.is_empty())
            .map(|l| Ok(serde_json::from_str(l)?))
            .collect(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn odd_complete_csv() {
        let rows = build_table(TableFamily::OddComplete, 2, 8).unwrap();
        let text = render_table(&rows, TableFormat::Csv).unwrap();
        assert_eq!(text, "n,count\n2,1\n3,0\n4,4\n5,0\n6,96\n7,0\n8,5888\n");
    }

    #[test]
    fn bipartite_includes_three_three() {
        let rows = build_table(TableFamily::Bipartite, 1, 3).unwrap();
        assert_eq!(rows.len(), 9);
        let text = render_table(&rows, TableFormat::Csv).unwrap();
        assert!(text.starts_with("m,n,count\n1,1,1\n"));
        assert!(text.ends_with("3,3,81\n"));
        let odd = render_table(
            &build_table(TableFamily::OddBipartite, 1, 3).unwrap(),
            TableFormat::Csv,
        )
        .unwrap();
        assert_eq!(
            odd,
            "m,n,count\n1,1,1\n1,2,0\n1,3,1\n2,1,0\n2,2,0\n2,3,0\n3,1,1\n3,2,0\n3,3,9\n"
        );
    }

    #[test]
    fn jsonl_counts_are_strings() {
        let rows = build_table(TableFamily::Complete, 30, 30).unwrap();
        let text = render_table(&rows, TableFormat::Jsonl).unwrap();
        // 30^28 exceeds every float mantissa
        assert_eq!(
            text,
            "{\"n\":30,\"count\":\"228767924549610000000000000000000000000000\"}\n"
        );
    }

    #[test]
    fn rejects_bad_ranges() {
        assert!(matches!(
            build_table(TableFamily::Complete, 5, 4),
            Err(CliError::Usage(_))
        ));
        assert!(matches!(
            build_table(TableFamily::Complete, 0, 4),
            Err(CliError::Usage(_))
        ));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(48))]

        #[test]
        fn tables_round_trip_byte_identical(
            family in prop_oneof![
                Just(TableFamily::OddComplete),
                Just(TableFamily::OddBipartite),
                Just(TableFamily::Complete),
                Just(TableFamily::Bipartite),
            ],
            from in 1u32..=20,
            span in 0u32..=12,
            csv in any::<bool>(),
        ) {
            let format = if csv { TableFormat::Csv } else { TableFormat::Jsonl };
            let rows = build_table(family, from, from + span).unwrap();
            let text = render_table(&rows, format).unwrap();
            let parsed = parse_table(&text, format).unwrap();
            prop_assert_eq!(&parsed, &rows);
            prop_assert_eq!(render_table(&parsed, format).unwrap(), text);
        }
    }
}
