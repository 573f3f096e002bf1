//! OEIS b-files: one `index value` pair per line, `#` comments.

use std::collections::BTreeMap;
use std::fmt;
use std::path::Path;

use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("b-file line {line}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BFile {
    sequence_id: String,
    entries: BTreeMap<i64, i128>,
}

impl BFile {
    pub fn parse(sequence_id: impl Into<String>, text: &str) -> Result<Self, ParseError> {
        let mut entries = BTreeMap::new();
        let mut last: Option<i64> = None;
        for (i, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let err = |message: String| ParseError {
                line: i + 1,
                message,
            };
            let mut fields = line.split_whitespace();
            let (Some(index), Some(value), None) = (fields.next(), fields.next(), fields.next())
            else {
                return Err(err(format!("expected `index value`, got {line:?}")));
            };
            let index: i64 = index
                .parse()
                .map_err(|_| err(format!("bad index {index:?}")))?;
            let value: i128 = value
                .parse()
                .map_err(|_| err(format!("bad value {value:?}")))?;
            if last.is_some_and(|prev| index <= prev) {
                return Err(err(format!("index {index} is not increasing")));
            }
            last = Some(index);
            entries.insert(index, value);
        }
        Ok(BFile {
            sequence_id: sequence_id.into(),
            entries,
        })
    }

    /// Reads a b-file, taking the sequence id from a leading `# Annnnnn`
    /// comment or else from a `bnnnnnn.txt` file name.
    pub fn read(path: &Path) -> std::io::Result<Result<Self, ParseError>> {
        let text = std::fs::read_to_string(path)?;
        let id = sequence_id_from_text(&text)
            .or_else(|| sequence_id_from_path(path))
            .unwrap_or_default();
        Ok(Self::parse(id, &text))
    }

    pub fn sequence_id(&self) -> &str {
        &self.sequence_id
    }

    pub fn entries(&self) -> &BTreeMap<i64, i128> {
        &self.entries
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn last_index(&self) -> Option<i64> {
        self.entries.keys().next_back().copied()
    }

    pub fn get(&self, index: i64) -> Option<i128> {
        self.entries.get(&index).copied()
    }
}

impl fmt::Display for BFile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} ({} terms)", self.sequence_id, self.entries.len())
    }
}

fn sequence_id_from_text(text: &str) -> Option<String> {
    let comment = text.lines().find(|l| l.trim_start().starts_with('#'))?;
    comment
        .split(|c: char| !c.is_ascii_alphanumeric())
        .find(|w| is_sequence_id(w))
        .map(str::to_owned)
}

fn sequence_id_from_path(path: &Path) -> Option<String> {
    let stem = path.file_stem()?.to_str()?;
    let digits = stem.strip_prefix('b')?;
    (digits.len() == 6 && digits.bytes().all(|b| b.is_ascii_digit())).then(|| format!("A{digits}"))
}

fn is_sequence_id(word: &str) -> bool {
    word.len() == 7 && word.starts_with('A') && word[1..].bytes().all(|b| b.is_ascii_digit())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_pairs_and_skips_comments() {
        let b = BFile::parse("A049988", "# header\n1 1\n\n2 2\n  3   3 \n").unwrap();
        assert_eq!(b.len(), 3);
        assert_eq!(b.get(3), Some(3));
        assert_eq!(b.last_index(), Some(3));
    }

    #[test]
    fn reports_line_numbers() {
        let e = BFile::parse("x", "# c\n1 1\n2 two\n").unwrap_err();
        assert_eq!(e.line, 3);
        let e = BFile::parse("x", "1 1\n1 2\n").unwrap_err();
        assert_eq!(e.line, 2);
        let e = BFile::parse("x", "5\n").unwrap_err();
        assert_eq!(e.line, 1);
        assert!(BFile::parse("x", "1 2 3\n").is_err());
    }

    #[test]
    fn empty_file() {
        let b = BFile::parse("A000001", "").unwrap();
        assert!(b.is_empty());
        assert_eq!(b.last_index(), None);
    }

    #[test]
    fn big_and_negative_values() {
        let b = BFile::parse("x", "0 -4\n1 123456789012345678901234567\n").unwrap();
        assert_eq!(b.get(0), Some(-4));
        assert_eq!(b.get(1), Some(123456789012345678901234567));
    }

    #[test]
    fn sequence_ids() {
        assert_eq!(
            sequence_id_from_text("# A175239: Number of AP divisors\n1 1\n"),
            Some("A175239".into())
        );
        assert_eq!(sequence_id_from_text("1 1\n"), None);
        assert_eq!(
            sequence_id_from_path(Path::new("/tmp/b049988.txt")),
            Some("A049988".into())
        );
        assert_eq!(sequence_id_from_path(Path::new("seq.txt")), None);
    }
}
