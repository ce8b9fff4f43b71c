//! Corpus ingestion and shared text-measurement primitives.
//!
//! A [`Sample`] is one text unit with a stable id, a source tag, and a cached
//! character count. Ids are assigned in ingestion order by an [`Ingestor`],
//! which is the only stateful piece here; [`word_tokenize`] and
//! [`count_punctuation`] are pure and safe to call from any thread.

use std::collections::BTreeMap;
use std::io::BufRead;

use serde::{Deserialize, Serialize};
use unicode_properties::{GeneralCategoryGroup, UnicodeGeneralCategory};

use crate::error::{Error, Result};

/// Where a sample came from. Serialized as `"base"`, `"tv"`, or a free-form
/// label for anything else.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum SourceTag {
    Base,
    Tv,
    Other(String),
}

impl SourceTag {
    pub fn parse(label: &str) -> SourceTag {
        match label {
            "base" => SourceTag::Base,
            "tv" => SourceTag::Tv,
            other => SourceTag::Other(other.to_string()),
        }
    }

    pub fn label(&self) -> &str {
        match self {
            SourceTag::Base => "base",
            SourceTag::Tv => "tv",
            SourceTag::Other(label) => label,
        }
    }
}

impl std::fmt::Display for SourceTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

impl Serialize for SourceTag {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(self.label())
    }
}

impl<'de> Deserialize<'de> for SourceTag {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let label = String::deserialize(d)?;
        Ok(SourceTag::parse(&label))
    }
}

/// One text unit. `char_count` is the number of Unicode scalar values in
/// `text`, whitespace included, and is fixed at construction.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Sample {
    pub id: u64,
    pub text: String,
    pub source: SourceTag,
    pub char_count: usize,
}

impl Sample {
    pub fn new(id: u64, text: impl Into<String>, source: SourceTag) -> Sample {
        let text = text.into();
        let char_count = text.chars().count();
        Sample {
            id,
            text,
            source,
            char_count,
        }
    }

    /// Words of the sample text; see [`word_tokenize`].
    pub fn words(&self) -> Vec<&str> {
        word_tokenize(&self.text)
    }

    /// Number of words without materializing the word list.
    pub fn word_count(&self) -> usize {
        self.text.split_whitespace().count()
    }
}

/// Split text into words: maximal runs of non-whitespace Unicode scalars, in
/// order. Punctuation stays attached to its word. Whitespace-only input
/// yields an empty list.
pub fn word_tokenize(text: &str) -> Vec<&str> {
    text.split_whitespace().collect()
}

/// Count Unicode scalars whose general category is one of the punctuation
/// categories (Pc, Pd, Pe, Pf, Pi, Po, Ps).
pub fn count_punctuation(text: &str) -> usize {
    text.chars()
        .filter(|c| c.general_category_group() == GeneralCategoryGroup::Punctuation)
        .count()
}

/// Input shape accepted by [`Ingestor::ingest`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum InputFormat {
    /// One JSON object per line with a required `"text"` string field and an
    /// optional `"source"` field overriding the stream-level tag.
    Jsonl,
    /// One sample per line, trimmed of the trailing newline only.
    PlainLines,
}

#[derive(Deserialize)]
struct JsonlRecord {
    text: String,
    #[serde(default)]
    source: Option<SourceTag>,
}

/// Assigns ids sequentially across every stream it ingests. Ingestion is
/// sequential per stream; ids depend on record order.
#[derive(Debug, Default)]
pub struct Ingestor {
    next_id: u64,
    skipped_empty: u64,
}

impl Ingestor {
    pub fn new() -> Ingestor {
        Ingestor::default()
    }

    /// Records skipped so far because they were empty after trimming.
    pub fn skipped_empty(&self) -> u64 {
        self.skipped_empty
    }

    /// Next id that will be assigned.
    pub fn next_id(&self) -> u64 {
        self.next_id
    }

    /// Read one stream into samples, one per non-empty record.
    ///
    /// The run aborts on the first malformed record: invalid UTF-8 reports
    /// the absolute byte offset, a JSONL line without a usable `"text"`
    /// reports the 1-based line number. Nothing is returned from a failed
    /// stream and the id counter is left unchanged.
    pub fn ingest(
        &mut self,
        reader: impl BufRead,
        format: InputFormat,
        source: SourceTag,
    ) -> Result<Vec<Sample>> {
        let mut reader = reader;
        let mut samples = Vec::new();
        let mut buf: Vec<u8> = Vec::new();
        let mut line_no: u64 = 0;
        let mut byte_offset: u64 = 0;
        let mut skipped: u64 = 0;
        let start_id = self.next_id;
        let mut next_id = start_id;

        loop {
            buf.clear();
            let read = reader
                .read_until(b'\n', &mut buf)
                .map_err(|e| Error::io("<stream>", e))?;
            if read == 0 {
                break;
            }
            line_no += 1;
            let line = std::str::from_utf8(&buf).map_err(|e| Error::Decode {
                offset: byte_offset + e.valid_up_to() as u64,
            })?;
            byte_offset += read as u64;

            // Trailing newline (and a CR before it) belongs to the framing,
            // not the record.
            let line = line.strip_suffix('\n').unwrap_or(line);
            let line = line.strip_suffix('\r').unwrap_or(line);

            let (text, record_source) = match format {
                InputFormat::PlainLines => (line.to_string(), None),
                InputFormat::Jsonl => {
                    if line.trim().is_empty() {
                        skipped += 1;
                        continue;
                    }
                    let record: JsonlRecord =
                        serde_json::from_str(line).map_err(|e| Error::Record {
                            line: line_no,
                            message: e.to_string(),
                        })?;
                    (record.text, record.source)
                }
            };

            if text.trim().is_empty() {
                skipped += 1;
                continue;
            }

            let sample_source = record_source.unwrap_or_else(|| source.clone());
            samples.push(Sample::new(next_id, text, sample_source));
            next_id += 1;
        }

        self.next_id = next_id;
        self.skipped_empty += skipped;
        Ok(samples)
    }
}

/// Word-budget accounting over a corpus.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct CorpusStats {
    pub sample_count: u64,
    pub total_words: u64,
    /// Word totals keyed by source label; BTreeMap keeps serialization stable.
    pub words_by_source: BTreeMap<String, u64>,
    /// Filled in by the filter pass; zero otherwise.
    pub duplicate_count: u64,
}

impl CorpusStats {
    /// Per-source word totals for a corpus. `duplicate_count` is left at 0.
    pub fn from_samples<'a>(samples: impl IntoIterator<Item = &'a Sample>) -> CorpusStats {
        let mut stats = CorpusStats::default();
        for sample in samples {
            let words = sample.word_count() as u64;
            stats.sample_count += 1;
            stats.total_words += words;
            *stats
                .words_by_source
                .entry(sample.source.label().to_string())
                .or_insert(0) += words;
        }
        stats
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    #[test]
    fn word_tokenize_splits_on_whitespace() {
        assert_eq!(word_tokenize("the cat sat"), vec!["the", "cat", "sat"]);
        assert_eq!(word_tokenize("  a  b "), vec!["a", "b"]);
        assert_eq!(word_tokenize("don't stop!"), vec!["don't", "stop!"]);
        assert_eq!(word_tokenize("   "), Vec::<&str>::new());
        assert_eq!(word_tokenize(""), Vec::<&str>::new());
    }

    #[test]
    fn count_punctuation_basic() {
        assert_eq!(count_punctuation("Hello, world!"), 2);
        assert_eq!(count_punctuation("abc"), 0);
    }

    #[test]
    fn count_punctuation_unicode_categories() {
        // Two quotes (Po), apostrophe (Po), em dash (Pd), period (Po).
        assert_eq!(count_punctuation("\"it's\u{2014}done.\""), 5);
    }

    // ASCII characters in the P* general categories, enumerated by hand from
    // the Unicode database. Symbols like $ + < = > ^ ` | ~ are S*, not P*.
    const ASCII_PUNCT: &str = "!\"#%&'()*,-./:;?@[\\]_{}";

    #[test]
    fn count_punctuation_matches_ascii_oracle() {
        for b in 0u8..=127 {
            let c = b as char;
            let expected = usize::from(ASCII_PUNCT.contains(c));
            assert_eq!(
                count_punctuation(&c.to_string()),
                expected,
                "category mismatch for {:?}",
                c
            );
        }
    }

    #[test]
    fn sample_caches_char_count() {
        let s = Sample::new(0, "hi there", SourceTag::Base);
        assert_eq!(s.char_count, 8);
        assert_eq!(s.words(), vec!["hi", "there"]);
        // Scalar values, not bytes.
        let s = Sample::new(1, "héé", SourceTag::Base);
        assert_eq!(s.char_count, 3);
    }

    #[test]
    fn ingest_jsonl() {
        let input = "{\"text\":\"hi there\"}\n{\"text\":\"bye\",\"source\":\"tv\"}\n";
        let mut ing = Ingestor::new();
        let samples = ing
            .ingest(Cursor::new(input), InputFormat::Jsonl, SourceTag::Base)
            .unwrap();
        assert_eq!(samples.len(), 2);
        assert_eq!(samples[0].text, "hi there");
        assert_eq!(samples[0].char_count, 8);
        assert_eq!(samples[0].id, 0);
        assert_eq!(samples[0].source, SourceTag::Base);
        // record-level source overrides the stream tag
        assert_eq!(samples[1].source, SourceTag::Tv);
        assert_eq!(samples[1].id, 1);
    }

    #[test]
    fn ingest_plain_lines_skips_empty() {
        let mut ing = Ingestor::new();
        let samples = ing
            .ingest(Cursor::new("a\n\nb"), InputFormat::PlainLines, SourceTag::Base)
            .unwrap();
        assert_eq!(samples.len(), 2);
        assert_eq!(samples[0].text, "a");
        assert_eq!(samples[1].text, "b");
        assert_eq!(samples[1].id, 1);
        assert_eq!(ing.skipped_empty(), 1);
    }

    #[test]
    fn ingest_plain_lines_trims_newline_only() {
        let mut ing = Ingestor::new();
        let samples = ing
            .ingest(
                Cursor::new("  padded  \n"),
                InputFormat::PlainLines,
                SourceTag::Base,
            )
            .unwrap();
        assert_eq!(samples[0].text, "  padded  ");
    }

    #[test]
    fn ingest_aborts_on_malformed_jsonl() {
        let input = "{\"text\":\"ok\"}\n{\"no_text\":1}\n{\"text\":\"also ok\"}\n";
        let mut ing = Ingestor::new();
        let err = ing
            .ingest(Cursor::new(input), InputFormat::Jsonl, SourceTag::Base)
            .unwrap_err();
        match err {
            Error::Record { line, .. } => assert_eq!(line, 2),
            other => panic!("expected record error, got {other:?}"),
        }
        // no partial ingestion: the id counter is untouched
        assert_eq!(ing.next_id(), 0);
    }

    #[test]
    fn ingest_reports_utf8_offset() {
        let mut bytes = b"ok\n".to_vec();
        bytes.extend_from_slice(&[b'a', 0xFF, b'b', b'\n']);
        let mut ing = Ingestor::new();
        let err = ing
            .ingest(Cursor::new(bytes), InputFormat::PlainLines, SourceTag::Base)
            .unwrap_err();
        match err {
            // offset 3 ("ok\n") + 1 valid byte ("a") = 4
            Error::Decode { offset } => assert_eq!(offset, 4),
            other => panic!("expected decode error, got {other:?}"),
        }
    }

    #[test]
    fn ids_continue_across_streams() {
        let mut ing = Ingestor::new();
        ing.ingest(Cursor::new("a\nb\n"), InputFormat::PlainLines, SourceTag::Base)
            .unwrap();
        let second = ing
            .ingest(Cursor::new("c\n"), InputFormat::PlainLines, SourceTag::Tv)
            .unwrap();
        assert_eq!(second[0].id, 2);
    }

    #[test]
    fn stats_by_source() {
        let samples = vec![
            Sample::new(0, "one two three", SourceTag::Base),
            Sample::new(1, "four five six", SourceTag::Base),
            Sample::new(2, "a b c d", SourceTag::Tv),
        ];
        let stats = CorpusStats::from_samples(&samples);
        assert_eq!(stats.sample_count, 3);
        assert_eq!(stats.total_words, 10);
        assert_eq!(stats.words_by_source["base"], 6);
        assert_eq!(stats.words_by_source["tv"], 4);
        assert_eq!(
            stats.total_words,
            stats.words_by_source.values().sum::<u64>()
        );
    }

    #[test]
    fn empty_corpus_stats_are_zero() {
        let stats = CorpusStats::from_samples(&[]);
        assert_eq!(stats, CorpusStats::default());
    }
}
