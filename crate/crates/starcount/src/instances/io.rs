//! Edge-list and CSV ingestion.
//!
//! Edge lists are UTF-8 text, one `u v` pair of 0-based vertex ids per
//! line. Header lines open the file: `#directed` marks a directed graph and
//! `#n N` declares the vertex count (needed to round-trip trailing isolated
//! vertices). Duplicate edges and self-loops are load errors, reported with
//! their line number.

use std::collections::HashSet;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use crate::error::{Error, Result};
use crate::oracle::{Graph, TableColumn};

fn parse_error(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

/// Parses the edge-list format from any reader.
pub fn read_edge_list(reader: impl BufRead) -> Result<Graph> {
    let mut directed = false;
    let mut declared_n: Option<(usize, usize)> = None; // (n, header line)
    let mut edges: Vec<(usize, usize)> = Vec::new();
    let mut seen: HashSet<(usize, usize)> = HashSet::new();
    let mut max_id: Option<usize> = None;

    for (idx, line) in reader.lines().enumerate() {
        let lineno = idx + 1;
        let line = line?;
        let text = line.trim();
        if text.is_empty() {
            continue;
        }
        if let Some(header) = text.strip_prefix('#') {
            if !edges.is_empty() {
                return Err(parse_error(lineno, "header after the first edge"));
            }
            let header = header.trim();
            if header == "directed" {
                directed = true;
            } else if let Some(count) = header.strip_prefix("n ") {
                let n: usize = count
                    .trim()
                    .parse()
                    .map_err(|_| parse_error(lineno, format!("bad vertex count {count:?}")))?;
                declared_n = Some((n, lineno));
            } else {
                return Err(parse_error(lineno, format!("unknown header {text:?}")));
            }
            continue;
        }
        let mut fields = text.split_whitespace();
        let (Some(a), Some(b), None) = (fields.next(), fields.next(), fields.next()) else {
            return Err(parse_error(lineno, format!("expected `u v`, got {text:?}")));
        };
        let u: usize = a
            .parse()
            .map_err(|_| parse_error(lineno, format!("bad vertex id {a:?}")))?;
        let v: usize = b
            .parse()
            .map_err(|_| parse_error(lineno, format!("bad vertex id {b:?}")))?;
        if u == v {
            return Err(parse_error(lineno, format!("self-loop at vertex {u}")));
        }
        let key = if directed {
            (u, v)
        } else {
            (u.min(v), u.max(v))
        };
        if !seen.insert(key) {
            return Err(parse_error(lineno, format!("duplicate edge ({u}, {v})")));
        }
        max_id = Some(max_id.unwrap_or(0).max(u).max(v));
        edges.push((u, v));
    }

    let required = max_id.map_or(0, |id| id + 1);
    let n = match declared_n {
        Some((n, lineno)) => {
            if n < required {
                return Err(parse_error(
                    lineno,
                    format!("declared n = {n} but vertex {} appears", required - 1),
                ));
            }
            n
        }
        None => required,
    };
    if directed {
        Graph::directed(n, &edges)
    } else {
        Graph::undirected(n, &edges)
    }
}

pub fn load_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    read_edge_list(BufReader::new(File::open(path)?))
}

/// Writes the edge-list format; inverse of [`read_edge_list`].
pub fn write_edge_list(g: &Graph, mut out: impl Write) -> std::io::Result<()> {
    writeln!(out, "#n {}", g.vertex_count())?;
    if g.is_directed() {
        writeln!(out, "#directed")?;
    }
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}")?;
    }
    Ok(())
}

pub fn save_edge_list(g: &Graph, path: impl AsRef<Path>) -> Result<()> {
    let mut file = File::create(path)?;
    write_edge_list(g, &mut file)?;
    Ok(())
}

/// Reads one named column from CSV input: every non-empty cell value is a
/// label, counted by occurrence, ordered by first appearance.
pub fn read_csv_column(reader: impl Read, column: &str) -> Result<TableColumn> {
    let mut csv = csv::ReaderBuilder::new()
        .has_headers(true)
        .flexible(true)
        .from_reader(reader);
    let headers = csv.headers().map_err(|e| csv_error(&e))?.clone();
    let Some(col) = headers.iter().position(|h| h == column) else {
        return Err(Error::invalid(format!(
            "column {column:?} not found; available: {:?}",
            headers.iter().collect::<Vec<_>>()
        )));
    };
    let mut order: Vec<String> = Vec::new();
    let mut counts: std::collections::HashMap<String, u64> = std::collections::HashMap::new();
    for record in csv.records() {
        let record = record.map_err(|e| csv_error(&e))?;
        let Some(cell) = record.get(col) else {
            continue;
        };
        if cell.is_empty() {
            continue;
        }
        match counts.get_mut(cell) {
            Some(c) => *c += 1,
            None => {
                order.push(cell.to_string());
                counts.insert(cell.to_string(), 1);
            }
        }
    }
    let count_vec: Vec<u64> = order.iter().map(|label| counts[label]).collect();
    TableColumn::new(order, count_vec)
}

pub fn load_csv(path: impl AsRef<Path>, column: &str) -> Result<TableColumn> {
    read_csv_column(File::open(path)?, column)
}

fn csv_error(e: &csv::Error) -> Error {
    let line = e.position().map(|p| p.line() as usize).unwrap_or(0);
    Error::Parse {
        line,
        message: e.to_string(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn round_trips_graphs_with_isolated_vertices() {
        let g = Graph::undirected(6, &[(0, 1), (1, 2)]).unwrap();
        let mut bytes = Vec::new();
        write_edge_list(&g, &mut bytes).unwrap();
        let parsed = read_edge_list(Cursor::new(&bytes)).unwrap();
        assert_eq!(parsed, g);

        let d = Graph::directed(4, &[(0, 1), (1, 0), (2, 3)]).unwrap();
        let mut bytes = Vec::new();
        write_edge_list(&d, &mut bytes).unwrap();
        assert_eq!(read_edge_list(Cursor::new(&bytes)).unwrap(), d);
    }

    #[test]
    fn rejects_self_loops_with_line_numbers() {
        let err = read_edge_list(Cursor::new("0 1\n2 2\n")).unwrap_err();
        match err {
            Error::Parse { line, message } => {
                assert_eq!(line, 2);
                assert!(message.contains("self-loop"));
            }
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn rejects_duplicates_in_either_orientation() {
        assert!(read_edge_list(Cursor::new("0 1\n1 0\n")).is_err());
        // For directed graphs the reverse arc is legitimate.
        assert!(read_edge_list(Cursor::new("#directed\n0 1\n1 0\n")).is_ok());
    }

    #[test]
    fn rejects_malformed_lines_and_headers() {
        assert!(read_edge_list(Cursor::new("0 1 2\n")).is_err());
        assert!(read_edge_list(Cursor::new("zero one\n")).is_err());
        assert!(read_edge_list(Cursor::new("#weighted\n0 1\n")).is_err());
        assert!(read_edge_list(Cursor::new("0 1\n#directed\n")).is_err());
        assert!(read_edge_list(Cursor::new("#n 2\n0 5\n")).is_err());
    }

    #[test]
    fn csv_ingestion_counts_labels() {
        let data = "city,value\nparis,1\nlyon,2\nparis,3\n,4\nparis,5\n";
        let t = read_csv_column(Cursor::new(data), "city").unwrap();
        assert_eq!(t.labels(), &["paris".to_string(), "lyon".to_string()]);
        assert_eq!(t.counts(), &[3, 1]);
        assert!(read_csv_column(Cursor::new(data), "missing").is_err());
    }
}
