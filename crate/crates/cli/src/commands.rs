use std::fmt::{self, Write as _};
use std::path::{Path, PathBuf};

use transversals::chessboard::{decompose, ChessboardDecomposition};
use transversals::oracle::FiniteGroup;
use transversals::primitives::{primitive_in_each_coset, scan_subgroup, SubgroupPrimitivity};
use transversals::shifting_boxes::{generating_left_transversal, lr_generating_transversal_rank3};
use transversals::{
    parse_presentation, todd_coxeter, Alphabet, CosetTable, EnumLimits, Error, GeneratingTuple,
    MoveLog, Presentation, SubgroupSpec, Transversal, Word,
};

use crate::{Command, Common, OracleCommand, WithTuple};

pub const EXIT_IO: u8 = 1;
pub const EXIT_LIMIT: u8 = 2;
pub const EXIT_PRECONDITION: u8 = 3;
pub const EXIT_PARSE: u8 = 4;

#[derive(Debug)]
pub enum CliError {
    Io(PathBuf, std::io::Error),
    Lib(Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Io(..) => EXIT_IO,
            CliError::Lib(Error::LimitExceeded { .. }) => EXIT_LIMIT,
            CliError::Lib(Error::Parse { .. }) => EXIT_PARSE,
            CliError::Lib(_) => EXIT_PRECONDITION,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Io(path, e) => write!(f, "{}: {e}", path.display()),
            CliError::Lib(e) => e.fmt(f),
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Lib(e)
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io(path.to_path_buf(), e))
}

struct Loaded {
    p: Presentation,
    h: SubgroupSpec,
    limits: EnumLimits,
}

impl Loaded {
    fn new(c: &Common) -> Result<Loaded> {
        let (p, h) = parse_presentation(&read(&c.presentation)?)?;
        Ok(Loaded {
            p,
            h,
            limits: EnumLimits {
                max_cosets: c.max_cosets,
            },
        })
    }

    fn table(&self) -> Result<CosetTable> {
        Ok(todd_coxeter(&self.p, &self.h, self.limits)?)
    }

    fn alphabet(&self) -> &Alphabet {
        self.p.alphabet()
    }

    fn tuple(&self, text: Option<&str>) -> Result<GeneratingTuple> {
        let words = match text {
            None => (0..self.alphabet().len()).map(Word::generator).collect(),
            Some(text) => text
                .split(',')
                .map(|w| self.p.parse_word(w.trim()))
                .collect::<transversals::Result<Vec<_>>>()?,
        };
        Ok(GeneratingTuple::new(words))
    }
}

pub fn run(command: Command) -> Result<String> {
    match command {
        Command::Enumerate(c) => Ok(Loaded::new(&c)?.table()?.to_tsv()),
        Command::Transversal(args) => transversal(&args, false),
        Command::LrTransversal(args) => transversal(&args, true),
        Command::Chessboard {
            common,
            second_subgroup,
        } => chessboard(&common, second_subgroup.as_deref()),
        Command::PrimitiveScan { args, cosets } => primitive_scan(&args, cosets),
        Command::Oracle(o) => oracle(o),
    }
}

fn transversal(args: &WithTuple, left_right: bool) -> Result<String> {
    let l = Loaded::new(&args.common)?;
    let t = l.table()?;
    let s = l.tuple(args.tuple.as_deref())?;
    let (tuple, log, tr) = if left_right {
        let out = lr_generating_transversal_rank3(&t, &s)?;
        (out.tuple, out.log, out.transversal)
    } else {
        let out = generating_left_transversal(&t, &s)?;
        (out.tuple, out.log, out.transversal)
    };
    tr.check(&t)?;
    let contains = tuple.entries().iter().all(|w| tr.contains(w));
    let a = l.alphabet();
    let mut out = render_words(&tr, a);
    render_log(&mut out, &log);
    let _ = writeln!(out, "tuple: {}", tuple.display(a));
    let _ = writeln!(out, "contains-tuple: {}", yes_no(contains));
    Ok(out)
}

fn render_words(tr: &Transversal, a: &Alphabet) -> String {
    let mut out = String::new();
    for w in tr.sorted_words() {
        let _ = writeln!(out, "{}", w.display(a));
    }
    out
}

fn render_log(out: &mut String, log: &MoveLog) {
    let _ = writeln!(out, "moves: {}", log.len());
    out.push_str(&log.to_string());
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn chessboard(common: &Common, second: Option<&Path>) -> Result<String> {
    let l = Loaded::new(common)?;
    let th = l.table()?;
    let tk = match second {
        None => th.clone(),
        Some(path) => {
            let (p2, k) = parse_presentation(&read(path)?)?;
            if p2.alphabet() != l.alphabet() {
                return Err(Error::AlphabetMismatch.into());
            }
            todd_coxeter(&l.p, &k, l.limits)?
        }
    };
    let d = decompose(&th, &tk)?;
    Ok(render_chessboard(&d, l.alphabet()))
}

fn render_chessboard(d: &ChessboardDecomposition, a: &Alphabet) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "blocks: {}", d.blocks.len());
    for (i, b) in d.blocks.iter().enumerate() {
        out.push('\n');
        let _ = writeln!(
            out,
            "block {}: {} x {}",
            i + 1,
            b.columns.len(),
            b.rows.len()
        );
        for c in &b.columns {
            let _ = write!(out, "\t{c}");
        }
        out.push('\n');
        for (r, row) in b.rows.iter().zip(b.witness_grid()) {
            let _ = write!(out, "{r}");
            for w in row {
                let _ = write!(out, "\t{}", w.display(a));
            }
            out.push('\n');
        }
    }
    out
}

fn primitive_scan(args: &WithTuple, cosets: bool) -> Result<String> {
    let l = Loaded::new(&args.common)?;
    let t = l.table()?;
    let s = l.tuple(args.tuple.as_deref())?;
    let report = if cosets {
        primitive_in_each_coset(&t, &s)?
    } else {
        scan_subgroup(&t, &s)
    };
    let a = l.alphabet();
    let mut out = match &report.subgroup {
        SubgroupPrimitivity::Yes(w) => format!("subgroup: yes {}\n", w.word.display(a)),
        SubgroupPrimitivity::No { m } => format!("subgroup: no (exceptional, m={m})\n"),
        SubgroupPrimitivity::Unknown => "subgroup: unknown\n".to_string(),
    };
    for (c, w) in &report.per_coset {
        let _ = writeln!(out, "coset {c}: {}", w.word.display(a));
    }
    Ok(out)
}

fn oracle(command: OracleCommand) -> Result<String> {
    let group = |c: &Common| -> Result<(Loaded, FiniteGroup)> {
        let l = Loaded::new(c)?;
        let g = FiniteGroup::materialize(&l.p, l.limits)?;
        Ok((l, g))
    };
    match command {
        OracleCommand::Order(c) => {
            let (_, g) = group(&c)?;
            Ok(format!("order: {}\n", g.order()))
        }
        OracleCommand::Primitives {
            common,
            n,
            seed,
            samples,
        } => {
            let (l, g) = group(&common)?;
            let ids = match seed {
                Some(seed) => g.sampled_primitive_elements(n, samples, seed),
                None => g.primitive_elements(n)?,
            };
            let mut words: Vec<&Word> = ids.iter().map(|&x| g.word_of(x)).collect();
            words.sort();
            let mut out = format!("primitive elements: {}\n", words.len());
            for w in words {
                let _ = writeln!(out, "{}", w.display(l.alphabet()));
            }
            Ok(out)
        }
        OracleCommand::Subgroups(c) => {
            let (l, g) = group(&c)?;
            let subgroups = g.all_subgroups()?;
            let mut out = format!("subgroups: {}\n", subgroups.len());
            for h in &subgroups {
                let _ = write!(out, "order {} index {}:", h.order(), g.order() / h.order());
                for w in &h.spec(&g).generators {
                    let _ = write!(out, " {}", w.display(l.alphabet()));
                }
                out.push('\n');
            }
            Ok(out)
        }
        OracleCommand::VerifyTransversal { common, file } => {
            let (l, g) = group(&common)?;
            let t = l.table()?;
            let text = read(&file)?;
            let words = text
                .lines()
                .map(|line| line.split('#').next().unwrap_or(""))
                .flat_map(|line| line.split([',', ' ', '\t']))
                .filter(|w| !w.is_empty())
                .map(|w| l.p.parse_word(w))
                .collect::<transversals::Result<Vec<_>>>()?;
            let tr = Transversal::new(words, transversals::TransversalKind::Left);
            let mut out = format!("words: {}\n", tr.len());
            let _ = writeln!(out, "left: {}", yes_no(tr.check_left(&t).is_ok()));
            let _ = writeln!(out, "right: {}", yes_no(tr.check_right(&t).is_ok()));
            let _ = writeln!(out, "generates: {}", yes_no(g.generates(tr.words())));
            Ok(out)
        }
    }
}
