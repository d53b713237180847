//! Text format for protocol transcripts.
//!
//! ```text
//! # seed=7
//! RAW-ALICE
//! 0ab1a10b
//! RAW-BOB
//! 1b0a0ab1
//! ANNOUNCE
//! 0 3 5
//! SENT
//! 011
//! DECODED
//! 011
//! KEY-ALICE
//! 000110
//! KEY-BOB
//! 000110
//! ```
//!
//! Sections appear once each, in this order. `ANNOUNCE`, `SENT` and `DECODED`
//! hold one line per word; the key sections hold a single bit string, empty
//! when no word was sent. `# key=value` lines form the run manifest; other
//! `#` lines and blank lines are ignored.

use super::ProtocolTranscript;
use crate::error::{Error, Result};
use crate::gf4::Word;
use std::fmt::Write as _;

const SECTIONS: [&str; 7] = [
    "RAW-ALICE",
    "RAW-BOB",
    "ANNOUNCE",
    "SENT",
    "DECODED",
    "KEY-ALICE",
    "KEY-BOB",
];

fn bits_string(bits: &[bool]) -> String {
    bits.iter().map(|&b| if b { '1' } else { '0' }).collect()
}

pub fn write_transcript(t: &ProtocolTranscript, manifest: &[(String, String)]) -> String {
    let mut out = String::new();
    for (k, v) in manifest {
        let _ = writeln!(out, "# {k}={v}");
    }
    let _ = writeln!(out, "RAW-ALICE\n{}", t.alice_letters);
    let _ = writeln!(out, "RAW-BOB\n{}", t.bob_letters);
    out.push_str("ANNOUNCE\n");
    for positions in &t.announcements {
        let line: Vec<String> = positions.iter().map(usize::to_string).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out.push_str("SENT\n");
    for w in &t.sent_words {
        let _ = writeln!(out, "{w}");
    }
    out.push_str("DECODED\n");
    for w in &t.decoded_words {
        let _ = writeln!(out, "{w}");
    }
    let _ = writeln!(out, "KEY-ALICE\n{}", bits_string(&t.key_bits_alice));
    let _ = writeln!(out, "KEY-BOB\n{}", bits_string(&t.key_bits_bob));
    out
}

/// Parses a transcript and its manifest, then checks the transcript invariants.
pub fn parse_transcript(text: &str) -> Result<(ProtocolTranscript, Vec<(String, String)>)> {
    let err = |line: usize, message: String| Error::Parse { line, message };
    let mut manifest = Vec::new();
    let mut bodies: Vec<Vec<(usize, &str)>> = vec![Vec::new(); SECTIONS.len()];
    let mut current: Option<usize> = None;
    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let l = raw.trim();
        if let Some(c) = l.strip_prefix('#') {
            if let Some((k, v)) = c.trim().split_once('=') {
                manifest.push((k.trim().to_string(), v.trim().to_string()));
            }
            continue;
        }
        if l.is_empty() {
            continue;
        }
        if let Some(s) = SECTIONS.iter().position(|&h| h == l) {
            let expected = current.map_or(0, |c| c + 1);
            if s != expected {
                return Err(err(line, format!("section {l} out of order")));
            }
            current = Some(s);
            continue;
        }
        match current {
            Some(s) => bodies[s].push((line, l)),
            None => return Err(err(line, format!("content before RAW-ALICE: {l:?}"))),
        }
    }
    if current != Some(SECTIONS.len() - 1) {
        return Err(err(text.lines().count(), "missing sections".into()));
    }

    let single = |s: usize| -> Result<Option<(usize, &str)>> {
        match bodies[s][..] {
            [] => Ok(None),
            [one] => Ok(Some(one)),
            [_, (line, _), ..] => Err(err(line, format!("{} takes a single line", SECTIONS[s]))),
        }
    };
    let word = |(line, l): (usize, &str)| -> Result<Word> {
        l.parse().map_err(|e: Error| err(line, e.to_string()))
    };
    let bits = |s: usize| -> Result<Vec<bool>> {
        let Some((line, l)) = single(s)? else {
            return Ok(Vec::new());
        };
        l.chars()
            .map(|c| match c {
                '0' => Ok(false),
                '1' => Ok(true),
                _ => Err(err(line, format!("bad key bit {c:?}"))),
            })
            .collect()
    };

    let raw = |s: usize| -> Result<Word> {
        let entry = single(s)?.ok_or_else(|| err(0, format!("{} is empty", SECTIONS[s])))?;
        word(entry)
    };
    let alice_letters = raw(0)?;
    let bob_letters = raw(1)?;
    let announcements = bodies[2]
        .iter()
        .map(|&(line, l)| {
            l.split_whitespace()
                .map(|p| {
                    p.parse::<usize>()
                        .map_err(|_| err(line, format!("bad position {p:?}")))
                })
                .collect::<Result<Vec<usize>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let sent_words = bodies[3]
        .iter()
        .map(|&e| word(e))
        .collect::<Result<Vec<_>>>()?;
    let decoded_words = bodies[4]
        .iter()
        .map(|&e| word(e))
        .collect::<Result<Vec<_>>>()?;
    let t = ProtocolTranscript {
        letters_consumed: announcements.iter().map(Vec::len).sum(),
        alice_letters,
        bob_letters,
        announcements,
        sent_words,
        decoded_words,
        key_bits_alice: bits(5)?,
        key_bits_bob: bits(6)?,
    };
    t.validate()?;
    Ok((t, manifest))
}
