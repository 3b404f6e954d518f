use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("pairs line {line}: expected `start,target`, got {text:?}")]
pub struct PairsError {
    pub line: usize,
    pub text: String,
}

/// Reads `start,target` lines. A leading `start,target` header, blank lines
/// and `#` comments are skipped.
pub fn parse_pairs(text: &str) -> Result<Vec<(String, String)>, PairsError> {
    let mut out = Vec::new();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') || (out.is_empty() && line == "start,target") {
            continue;
        }
        match line.split(',').map(str::trim).collect::<Vec<_>>()[..] {
            [a, b] if !a.is_empty() && !b.is_empty() => out.push((a.to_owned(), b.to_owned())),
            _ => {
                return Err(PairsError {
                    line: i + 1,
                    text: raw.to_owned(),
                })
            }
        }
    }
    Ok(out)
}
