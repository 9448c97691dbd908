//! Parsing of nodal sample files.
//!
//! Two layouts are accepted:
//!
//! * a headered table whose first non-empty line is `beta,value`
//!   (case-insensitive, whitespace ignored), followed by one `beta,value`
//!   row per node in any order, each node index appearing exactly once;
//! * a headerless single column with one value per line, listed in node
//!   order (node 1 first).
//!
//! Blank lines are skipped everywhere. Errors carry 1-based line numbers
//! from the original file so they can be reported verbatim.

/// Parses sample text into values ordered by node index (node 1 first).
///
/// The number of nodes is the number of data rows; at least two are
/// required. Every value must be finite.
pub fn parse_samples(text: &str) -> Result<Vec<f64>, String> {
    let rows: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, raw)| (i + 1, raw.trim()))
        .filter(|(_, t)| !t.is_empty())
        .collect();
    let Some((_, first)) = rows.first() else {
        return Err("file contains no samples".to_string());
    };
    if is_header(first) {
        parse_table(&rows[1..])
    } else {
        parse_column(&rows)
    }
}

/// Recognizes the `beta,value` header, ignoring case and whitespace.
fn is_header(line: &str) -> bool {
    let squashed: String = line
        .chars()
        .filter(|c| !c.is_whitespace())
        .collect::<String>()
        .to_ascii_lowercase();
    squashed == "beta,value"
}

fn parse_table(rows: &[(usize, &str)]) -> Result<Vec<f64>, String> {
    let n = rows.len();
    if n < 2 {
        return Err(format!("need at least 2 sample rows after the header, got {n}"));
    }
    let mut values: Vec<Option<f64>> = vec![None; n];
    for &(line, text) in rows {
        let Some((beta_text, value_text)) = text.split_once(',') else {
            return Err(format!("line {line}: expected 'beta,value', got {text:?}"));
        };
        let beta: usize = beta_text
            .trim()
            .parse()
            .map_err(|_| format!("line {line}: invalid node index {:?}", beta_text.trim()))?;
        let value: f64 = value_text
            .trim()
            .parse()
            .map_err(|_| format!("line {line}: invalid value {:?}", value_text.trim()))?;
        if !(1..=n).contains(&beta) {
            return Err(format!("line {line}: node index {beta} is outside 1..={n}"));
        }
        if !value.is_finite() {
            return Err(format!("line {line}: value {value} is not finite"));
        }
        if values[beta - 1].replace(value).is_some() {
            return Err(format!("line {line}: node {beta} appears more than once"));
        }
    }
    // n rows filled n distinct slots, so every slot is occupied.
    Ok(values.into_iter().map(|v| v.unwrap()).collect())
}

fn parse_column(rows: &[(usize, &str)]) -> Result<Vec<f64>, String> {
    if rows.len() < 2 {
        return Err(format!("need at least 2 samples, got {}", rows.len()));
    }
    let mut values = Vec::with_capacity(rows.len());
    for &(line, text) in rows {
        if text.contains(',') {
            return Err(format!(
                "line {line}: expected one value per line (use a 'beta,value' header on line 1 for two-column data)"
            ));
        }
        let value: f64 = text
            .parse()
            .map_err(|_| format!("line {line}: invalid value {text:?}"))?;
        if !value.is_finite() {
            return Err(format!("line {line}: value {value} is not finite"));
        }
        values.push(value);
    }
    Ok(values)
}
