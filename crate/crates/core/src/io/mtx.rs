//! Matrix Market readers: `coordinate pattern symmetric` files as graph
//! adjacency (1-based indices become labels "1".."n", diagonal entries
//! ignored), and `coordinate real symmetric` / `array real` files as float
//! matrices.

use super::ParseError;
use crate::graph::Graph;
use crate::matrix::SquareMatrix;

struct Banner {
    format: String,
    field: String,
    symmetry: String,
}

fn parse_banner(text: &str) -> Result<(Banner, Vec<(usize, String)>), ParseError> {
    let mut lines = text.lines().enumerate();
    let (_, banner_line) = lines
        .next()
        .ok_or_else(|| ParseError::new(1, "empty file"))?;
    let tokens: Vec<String> = banner_line
        .split_whitespace()
        .map(str::to_lowercase)
        .collect();
    if tokens.len() != 5 || tokens[0] != "%%matrixmarket" || tokens[1] != "matrix" {
        return Err(ParseError::new(
            1,
            "expected `%%MatrixMarket matrix ...` banner",
        ));
    }
    let banner = Banner {
        format: tokens[2].clone(),
        field: tokens[3].clone(),
        symmetry: tokens[4].clone(),
    };
    let body: Vec<(usize, String)> = lines
        .filter(|(_, l)| {
            let t = l.trim();
            !t.is_empty() && !t.starts_with('%')
        })
        .map(|(i, l)| (i + 1, l.trim().to_string()))
        .collect();
    Ok((banner, body))
}

fn split3(line: &str, lineno: usize) -> Result<(usize, usize, Option<f64>), ParseError> {
    let tok: Vec<&str> = line.split_whitespace().collect();
    if tok.len() < 2 {
        return Err(ParseError::new(lineno, "expected at least two fields"));
    }
    let i: usize = tok[0]
        .parse()
        .map_err(|_| ParseError::new(lineno, format!("bad index `{}`", tok[0])))?;
    let j: usize = tok[1]
        .parse()
        .map_err(|_| ParseError::new(lineno, format!("bad index `{}`", tok[1])))?;
    let v = if tok.len() > 2 {
        Some(
            tok[2]
                .parse::<f64>()
                .map_err(|_| ParseError::new(lineno, format!("bad value `{}`", tok[2])))?,
        )
    } else {
        None
    };
    Ok((i, j, v))
}

/// Adjacency from a `coordinate pattern symmetric` file.
pub fn parse_graph(text: &str) -> Result<Graph, ParseError> {
    let (banner, body) = parse_banner(text)?;
    if banner.format != "coordinate" || banner.field != "pattern" || banner.symmetry != "symmetric"
    {
        return Err(ParseError::new(
            1,
            "graph input must be `coordinate pattern symmetric`",
        ));
    }
    let (first_line, rest) = body
        .split_first()
        .ok_or_else(|| ParseError::new(0, "missing size line"))?;
    let (rows, cols, _) = split3(&first_line.1, first_line.0)?;
    if rows != cols {
        return Err(ParseError::new(first_line.0, "adjacency must be square"));
    }
    let labels: Vec<String> = (1..=rows).map(|i| i.to_string()).collect();
    let mut edges = Vec::new();
    for (lineno, line) in rest {
        let (i, j, _) = split3(line, *lineno)?;
        if i == 0 || i > rows || j == 0 || j > rows {
            return Err(ParseError::new(
                *lineno,
                format!("index out of range: {i} {j}"),
            ));
        }
        if i == j {
            continue; // diagonal entries carry no adjacency
        }
        edges.push((i.to_string(), j.to_string()));
    }
    Graph::build(labels, edges).map_err(|e| ParseError::new(0, e.to_string()))
}

/// Float matrix from `coordinate real symmetric` or `array real
/// general|symmetric` input.
pub fn parse_real_matrix(text: &str) -> Result<SquareMatrix<f64>, ParseError> {
    let (banner, body) = parse_banner(text)?;
    if banner.field != "real" {
        return Err(ParseError::new(1, "matrix input must have field `real`"));
    }
    let (first_line, rest) = body
        .split_first()
        .ok_or_else(|| ParseError::new(0, "missing size line"))?;
    match (banner.format.as_str(), banner.symmetry.as_str()) {
        ("coordinate", "symmetric") => {
            let (rows, cols, _) = split3(&first_line.1, first_line.0)?;
            if rows != cols {
                return Err(ParseError::new(first_line.0, "matrix must be square"));
            }
            let mut m = SquareMatrix::zero(rows);
            for (lineno, line) in rest {
                let (i, j, v) = split3(line, *lineno)?;
                let v = v.ok_or_else(|| ParseError::new(*lineno, "missing value"))?;
                if i == 0 || i > rows || j == 0 || j > rows {
                    return Err(ParseError::new(*lineno, "index out of range"));
                }
                m.set(i, j, v);
                m.set(j, i, v);
            }
            Ok(m)
        }
        ("array", symmetry @ ("general" | "symmetric")) => {
            let sizes: Vec<&str> = first_line.1.split_whitespace().collect();
            if sizes.len() != 2 {
                return Err(ParseError::new(first_line.0, "expected `rows cols`"));
            }
            let rows: usize = sizes[0]
                .parse()
                .map_err(|_| ParseError::new(first_line.0, "bad row count"))?;
            let cols: usize = sizes[1]
                .parse()
                .map_err(|_| ParseError::new(first_line.0, "bad column count"))?;
            if rows != cols {
                return Err(ParseError::new(first_line.0, "matrix must be square"));
            }
            let mut values = Vec::new();
            for (lineno, line) in rest {
                for tok in line.split_whitespace() {
                    values.push(
                        tok.parse::<f64>()
                            .map_err(|_| ParseError::new(*lineno, format!("bad value `{tok}`")))?,
                    );
                }
            }
            let mut m = SquareMatrix::zero(rows);
            let mut it = values.into_iter();
            // Column-major; symmetric stores the lower triangle only.
            for j in 1..=cols {
                let start = if symmetry == "symmetric" { j } else { 1 };
                for i in start..=rows {
                    let v = it
                        .next()
                        .ok_or_else(|| ParseError::new(0, "not enough values"))?;
                    m.set(i, j, v);
                    if symmetry == "symmetric" {
                        m.set(j, i, v);
                    }
                }
            }
            if it.next().is_some() {
                return Err(ParseError::new(0, "trailing values"));
            }
            Ok(m)
        }
        _ => Err(ParseError::new(
            1,
            "supported matrix inputs: coordinate real symmetric, array real",
        )),
    }
}
