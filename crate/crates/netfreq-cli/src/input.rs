//! Input-source resolution shared by the subcommands.

use std::path::PathBuf;

use clap::Args;

use netfreq::{fibonacci, SuffixIndex, Text, TextError};

use crate::CliError;

/// Where the text comes from: a raw file, a literal string, or a generated
/// Fibonacci word. Exactly one must be given.
#[derive(Debug, Args)]
pub struct RawInput {
    /// Read the input text from a file (raw bytes, no decoding)
    #[arg(long, value_name = "FILE")]
    pub input: Option<PathBuf>,
    /// Use this string as the input text
    #[arg(long, value_name = "STRING", conflicts_with = "input")]
    pub text: Option<String>,
    /// Use the i-th Fibonacci word as the input text
    #[arg(long, value_name = "I", conflicts_with_all = ["input", "text"])]
    pub fib: Option<usize>,
}

impl RawInput {
    pub fn load_text(&self) -> Result<Text, CliError> {
        let text = match (&self.input, &self.text, self.fib) {
            (Some(path), None, None) => Text::from_file(path).map_err(text_error)?,
            (None, Some(s), None) => Text::from_bytes(s.as_bytes()).map_err(text_error)?,
            (None, None, Some(i)) => {
                let word = fibonacci::fib_word(i)
                    .map_err(|e| CliError::Validation(e.to_string()))?;
                Text::from_bytes(word.content()).expect("fibonacci words are sentinel-free")
            }
            _ => {
                return Err(CliError::Validation(
                    "exactly one of --input, --text, --fib is required".into(),
                ))
            }
        };
        Ok(text)
    }
}

/// Like [`RawInput`] but also accepts a prebuilt serialized index.
#[derive(Debug, Args)]
pub struct IndexedInput {
    /// Load a previously built index file
    #[arg(long, value_name = "FILE", conflicts_with_all = ["input", "text", "fib"])]
    pub index: Option<PathBuf>,
    #[command(flatten)]
    pub raw: RawInput,
}

impl IndexedInput {
    pub fn load_index(&self) -> Result<SuffixIndex, CliError> {
        if let Some(path) = &self.index {
            return SuffixIndex::load(path).map_err(|e| CliError::Failure(e.to_string()));
        }
        Ok(SuffixIndex::build(self.raw.load_text()?))
    }
}

fn text_error(e: TextError) -> CliError {
    match e {
        TextError::SentinelCollision { .. } => CliError::Validation(e.to_string()),
        TextError::Io(_) => CliError::Failure(e.to_string()),
    }
}
