use std::fs::File;
use std::io::{self, BufRead, BufReader};
use std::path::PathBuf;

use anyhow::{bail, Context, Result};
use clap::Args;
use specfac::{construct_family, graph6, Graph};

/// Exactly one graph source.
#[derive(Args, Debug, Clone)]
#[group(required = true, multiple = false)]
pub struct GraphSource {
    /// Graph in graph6 format.
    #[arg(long)]
    pub g6: Option<String>,
    /// Family member `K_s v (K_n1 u iK1)`, written `s=..,n1=..,i=..`.
    #[arg(long, value_parser = parse_family)]
    pub family: Option<Family>,
    /// File of graph6 lines (batch mode).
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Read graph6 lines from standard input (batch mode).
    #[arg(long)]
    pub stdin: bool,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Family {
    pub s: usize,
    pub n1: usize,
    pub i: usize,
}

pub fn parse_family(text: &str) -> Result<Family, String> {
    let (mut s, mut n1, mut i) = (None, None, None);
    for part in text.split(',') {
        let (key, value) = part.split_once('=').ok_or_else(|| format!("expected key=value, got {part:?}"))?;
        let value: usize = value.trim().parse().map_err(|e| format!("{key}: {e}"))?;
        let slot = match key.trim() {
            "s" => &mut s,
            "n1" => &mut n1,
            "i" => &mut i,
            other => return Err(format!("unknown family parameter {other:?} (expected s, n1, i)")),
        };
        if slot.replace(value).is_some() {
            return Err(format!("parameter {key} given twice"));
        }
    }
    match (s, n1, i) {
        (Some(s), Some(n1), Some(i)) => Ok(Family { s, n1, i }),
        _ => Err("family needs all of s, n1 and i".to_string()),
    }
}

pub enum Input {
    Single { label: String, graph: Graph },
    Batch(Box<dyn BufRead>),
}

impl GraphSource {
    pub fn open(&self) -> Result<Input> {
        if let Some(text) = &self.g6 {
            let graph = graph6::decode(text)?;
            return Ok(Input::Single { label: text.clone(), graph });
        }
        if let Some(f) = self.family {
            let graph = construct_family(f.s, f.n1, f.i)?;
            return Ok(Input::Single { label: format!("s={},n1={},i={}", f.s, f.n1, f.i), graph });
        }
        if let Some(path) = &self.file {
            let file = File::open(path).with_context(|| format!("opening {}", path.display()))?;
            return Ok(Input::Batch(Box::new(BufReader::new(file))));
        }
        if self.stdin {
            return Ok(Input::Batch(Box::new(BufReader::new(io::stdin()))));
        }
        bail!("no graph source given")
    }

    /// The single graph, rejecting batch sources.
    pub fn single(&self) -> Result<Graph> {
        match self.open()? {
            Input::Single { graph, .. } => Ok(graph),
            Input::Batch(_) => bail!(specfac::Error::Graph6("this command takes one graph; use --g6 or --family".into())),
        }
    }
}

/// Non-empty, non-comment lines, read in chunks of at most `chunk`.
pub fn next_chunk(reader: &mut dyn BufRead, chunk: usize, line_no: &mut usize) -> io::Result<Vec<(usize, String)>> {
    let mut out = Vec::with_capacity(chunk);
    let mut line = String::new();
    while out.len() < chunk {
        line.clear();
        if reader.read_line(&mut line)? == 0 {
            break;
        }
        *line_no += 1;
        let text = line.trim();
        if !text.is_empty() && !text.starts_with('#') {
            out.push((*line_no, text.to_string()));
        }
    }
    Ok(out)
}
