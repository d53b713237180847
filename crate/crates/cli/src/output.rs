use clap::ValueEnum;
use std::fmt::Display;
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// key=value lines on stdout, the human table on stderr.
    Both,
    /// Only key=value lines, on stdout.
    Kv,
    /// Only the human table, on stdout.
    Text,
}

/// Collects machine lines and human text separately so they never interleave.
pub struct Output {
    format: Format,
    kv: Vec<String>,
    text: Vec<String>,
}

impl Output {
    pub fn new(format: Format) -> Self {
        Self {
            format,
            kv: Vec::new(),
            text: Vec::new(),
        }
    }

    pub fn kv(&mut self, key: &str, value: impl Display) {
        self.kv.push(format!("{key}={value}"));
    }

    /// One machine line holding several `key=value` fields.
    pub fn record(&mut self, fields: &[(&str, String)]) {
        let line: Vec<String> = fields.iter().map(|(k, v)| format!("{k}={v}")).collect();
        self.kv.push(line.join(" "));
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.text.push(s.into());
    }

    /// Appends `rows` as left-aligned columns.
    pub fn table(&mut self, header: &[&str], rows: &[Vec<String>]) {
        let mut width: Vec<usize> = header.iter().map(|h| h.len()).collect();
        for r in rows {
            for (w, c) in width.iter_mut().zip(r) {
                *w = (*w).max(c.len());
            }
        }
        let fmt = |cells: Vec<&str>| -> String {
            let padded: Vec<String> = cells
                .iter()
                .zip(&width)
                .map(|(c, w)| format!("{c:<w$}"))
                .collect();
            padded.join("  ").trim_end().to_string()
        };
        self.text.push(fmt(header.to_vec()));
        for r in rows {
            self.text.push(fmt(r.iter().map(String::as_str).collect()));
        }
    }

    pub fn flush(self) -> std::io::Result<()> {
        let mut out = std::io::stdout().lock();
        let mut err = std::io::stderr().lock();
        match self.format {
            Format::Both => {
                for l in &self.text {
                    writeln!(err, "{l}")?;
                }
                for l in &self.kv {
                    writeln!(out, "{l}")?;
                }
            }
            Format::Kv => {
                for l in &self.kv {
                    writeln!(out, "{l}")?;
                }
            }
            Format::Text => {
                for l in &self.text {
                    writeln!(out, "{l}")?;
                }
            }
        }
        out.flush()
    }
}

/// Four significant digits, as in the printed tables.
pub fn sig4(x: f64) -> String {
    format!("{x:.3e}")
}
