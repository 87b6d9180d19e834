//! `cycweight`: low-weight codeword counts and diagonal-equation solution
//! counts from the command line.

mod report;

use std::process::ExitCode;
use std::sync::Arc;

use clap::{Args, Parser, Subcommand};
use cycweight::lowweight::{
    a2_count, a3_c1t, a3_lower_bound, c1t_gcd, d_value, easy_no_weight3, has_weight3_c1t, weight3_witnesses_in,
    Weight3Params,
};
use cycweight::relation::{
    diagonal_cost, diagonal_count_bruteforce, family_low_weights, family_nw_sequence, nw_terms, weights_from_nw,
};
use cycweight::{
    brute_weight_distribution, weight_distribution_by_encoding, Budget, Codeword, CyclicCode, DiagonalSystem, Error,
    Field, NwSequence, WeightPrefix,
};
use num_bigint::BigUint;
use serde_json::{json, Value};

use report::{big, bigs, Format, Method, Report};

#[derive(Parser)]
#[command(name = "cycweight", version, about = "Low-weight codewords of cyclic codes and diagonal equation counts")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value = "table")]
    format: Format,
    /// Maximum number of enumeration steps for brute-force computations.
    #[arg(long, global = true, default_value_t = Budget::default().0)]
    budget: u64,
}

#[derive(Args)]
struct FieldArgs {
    /// Characteristic.
    #[arg(long, default_value_t = 2)]
    p: u64,
    /// Extension degree.
    #[arg(long)]
    m: u32,
    /// Modulus coefficients c0,c1,...,cm (default: smallest primitive polynomial).
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

impl FieldArgs {
    fn build(&self) -> Result<Arc<Field>, Error> {
        let field = match &self.modulus {
            Some(c) => Field::from_coefficients(self.p, self.m, c)?,
            None => Field::new(self.p, self.m)?,
        };
        Ok(Arc::new(field))
    }
}

#[derive(Args)]
struct BinaryFieldArgs {
    /// Extension degree (q = 2^m).
    #[arg(long)]
    m: u32,
    /// Modulus coefficients c0,c1,...,cm.
    #[arg(long, value_delimiter = ',')]
    modulus: Option<Vec<u64>>,
}

impl BinaryFieldArgs {
    fn build(&self) -> Result<Arc<Field>, Error> {
        FieldArgs { p: 2, m: self.m, modulus: self.modulus.clone() }.build()
    }
}

#[derive(Subcommand)]
enum Command {
    /// Number of weight-2 codewords and the parameter D.
    A2 {
        #[command(flatten)]
        field: FieldArgs,
        /// Exponents t1,...,ts of the zeros.
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
    },
    /// Lower bound on weight-3 codewords for exponents in K_g(t), odd p.
    A3Bound {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long)]
        g: u32,
        #[arg(long)]
        t: u64,
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        /// List the constructed codewords.
        #[arg(long)]
        witnesses: bool,
    },
    /// Exact weight-3 count of the binary code C_(1,t).
    #[command(name = "a3-c1t")]
    A3C1t {
        #[command(flatten)]
        field: BinaryFieldArgs,
        #[arg(long)]
        t: u64,
    },
    /// Prime-factor criterion ruling out weight 3 in binary C_(1,t).
    NoW3 {
        #[arg(long)]
        m: u64,
        #[arg(long)]
        t: u64,
    },
    /// N_w from a weight prefix A_0,...,A_W (binary, q = 2^m).
    Nw {
        #[arg(long)]
        m: u32,
        /// A_0,A_1,...,A_W.
        #[arg(long, value_delimiter = ',', required = true)]
        weights: Vec<BigUint>,
        /// Arity w <= W.
        #[arg(long)]
        w: usize,
    },
    /// Weight prefix A_0,...,A_W from N_2,...,N_W (binary, q = 2^m).
    Invert {
        #[arg(long)]
        m: u32,
        /// N_2,N_3,...,N_W.
        #[arg(long, value_delimiter = ',', required = true)]
        nw: Vec<BigUint>,
    },
    /// Weight distribution up to a bound by enumerating supports.
    BruteWeights {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        #[arg(long, default_value_t = 6)]
        max_weight: usize,
    },
    /// Solutions of the diagonal system by enumeration (binary).
    BruteNw {
        #[command(flatten)]
        field: BinaryFieldArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        #[arg(long)]
        w: usize,
    },
    /// Closed forms for exponents (1, 2^k + 1) over GF(2^(2f+1)).
    Family {
        #[arg(long)]
        f: u64,
        #[arg(long)]
        k: u64,
        #[arg(long, default_value_t = 6)]
        max_arity: usize,
    },
    /// Cross-check every applicable formula against brute force for one code.
    Verify {
        #[command(flatten)]
        field: FieldArgs,
        #[arg(long, value_delimiter = ',', required = true)]
        exps: Vec<u64>,
        #[arg(long, default_value_t = 5)]
        max_weight: usize,
    },
}

/// Whether `verify` found a mismatch.
struct Outcome {
    report: Report,
    mismatch: bool,
}

impl From<Report> for Outcome {
    fn from(report: Report) -> Self {
        Outcome { report, mismatch: false }
    }
}

fn run(command: Command, budget: Budget) -> Result<Outcome, Error> {
    match command {
        Command::A2 { field, exps } => {
            let f = field.build()?;
            let code = CyclicCode::new(f.clone(), &exps)?;
            let mut r = Report::new(Method::Formula).field(&f).exponents(code.exponents());
            r.set("A_2", big(&a2_count(&code)?));
            r.set("D", d_value(&code));
            Ok(r.into())
        }
        Command::A3Bound { field, g, t, exps, witnesses } => {
            let f = field.build()?;
            let params = Weight3Params::new(field.p, field.m, g, t, &exps);
            let bound = a3_lower_bound(&params)?;
            let code = CyclicCode::new(f.clone(), &exps)?;
            let mut r = Report::new(Method::Formula).field(&f).exponents(code.exponents());
            r.set("A_3_lower_bound", big(&bound));
            r.set("tuples", params.tuple_count());
            if witnesses {
                let found = weight3_witnesses_in(&f, &params)?;
                let list: Vec<Value> = found
                    .witnesses
                    .iter()
                    .map(|w| {
                        json!({
                            "a": w.a, "b": w.b, "i": w.i, "j": w.j,
                            "codeword": codeword_string(&w.codeword),
                        })
                    })
                    .collect();
                r.set("witnesses", list);
            }
            Ok(r.into())
        }
        Command::A3C1t { field, t } => {
            let f = field.build()?;
            let g = c1t_gcd(&f, t)?;
            let mut r = Report::new(Method::Formula).field(&f).exponents(&[1, t % f.order()]);
            r.set("gcd", g.to_string());
            r.set("gcd_degree", g.deg().unwrap_or(0));
            r.set("has_weight_3", has_weight3_c1t(&f, t)?);
            r.set("A_3", big(&a3_c1t(&f, t)?));
            Ok(r.into())
        }
        Command::NoW3 { m, t } => {
            let mut r = Report::new(Method::Formula).field_params(2, m).exponents(&[1, t]);
            r.set("no_weight_3", easy_no_weight3(m, t));
            Ok(r.into())
        }
        Command::Nw { m, weights, w } => {
            let q = binary_q(m)?;
            let a = WeightPrefix::new(weights)?;
            let terms = nw_terms(q, &a, w)?;
            let total: BigUint = terms.iter().map(|(_, t)| t).sum();
            let mut r = Report::new(Method::Formula).field_params(2, m as u64);
            r.set("w", w);
            r.set("N_w", big(&total));
            let terms: Vec<Value> =
                terms.iter().map(|(v, t)| json!({"v": v.to_string(), "term": t.to_string()})).collect();
            r.set("terms", terms);
            Ok(r.into())
        }
        Command::Invert { m, nw } => {
            let q = binary_q(m)?;
            let a = weights_from_nw(q, &NwSequence::from_arity2(nw))?;
            let mut r = Report::new(Method::Formula).field_params(2, m as u64);
            r.set("A", bigs(a.values()));
            Ok(r.into())
        }
        Command::BruteWeights { field, exps, max_weight } => {
            let f = field.build()?;
            let code = CyclicCode::from_zeros(f.clone(), &exps)?;
            let a = brute_weight_distribution(&code, max_weight, budget)?;
            let mut r = Report::new(Method::Bruteforce).field(&f).exponents(code.exponents());
            r.set("A", bigs(a.values()));
            Ok(r.into())
        }
        Command::BruteNw { field, exps, w } => {
            let f = field.build()?;
            let sys = DiagonalSystem::new(f.clone(), &exps, w)?;
            let count = diagonal_count_bruteforce(&sys, budget)?;
            let mut r = Report::new(Method::Bruteforce).field(&f).exponents(sys.exponents());
            r.set("w", w);
            r.set("N_w", big(&count));
            Ok(r.into())
        }
        Command::Family { f, k, max_arity } => {
            let nws = family_nw_sequence(f, k, max_arity)?;
            let a = family_low_weights(f, k)?;
            let m = 2 * f + 1;
            let r = Report::new(Method::Formula).exponents(&[1, (1 << k) + 1]);
            let mut r = match u32::try_from(m)
                .map_err(|_| Error::FieldTooLarge { p: 2, m: u32::MAX })
                .and_then(|m| Field::new(2, m))
            {
                Ok(field) => r.field(&field),
                Err(_) => r.field_params(2, m),
            };
            r.set("q", big(&(BigUint::from(1u32) << (2 * f + 1))));
            r.set("N_2..N_W", bigs(nws.values()));
            r.set("A", bigs(a.values()));
            Ok(r.into())
        }
        Command::Verify { field, exps, max_weight } => verify(&field.build()?, &exps, max_weight, budget),
    }
}

/// `1 + 3x^6 + x^18` style, lowest degree first.
fn codeword_string(c: &Codeword) -> String {
    let terms: Vec<String> = c
        .coeffs()
        .iter()
        .enumerate()
        .filter(|(_, &a)| a != 0)
        .map(|(i, &a)| match (i, a) {
            (0, a) => a.to_string(),
            (i, 1) => format!("x^{i}"),
            (i, a) => format!("{a}x^{i}"),
        })
        .collect();
    terms.join(" + ")
}

fn binary_q(m: u32) -> Result<u64, Error> {
    match 2u64.checked_pow(m) {
        Some(q) if m >= 1 && q <= cycweight::gf::MAX_ORDER => Ok(q),
        _ if m == 0 => Err(Error::ZeroDegree),
        _ => Err(Error::FieldTooLarge { p: 2, m }),
    }
}

struct Checks {
    rows: Vec<Value>,
    mismatch: bool,
}

impl Checks {
    fn compare(&mut self, name: String, formula: &BigUint, oracle: &BigUint) {
        let ok = formula == oracle;
        self.mismatch |= !ok;
        let status = if ok { "ok" } else { "mismatch" };
        self.rows.push(json!({"check": name, "formula": big(formula), "oracle": big(oracle), "status": status}));
    }

    fn skip(&mut self, name: String, reason: String) {
        self.rows.push(json!({"check": name, "status": "skipped", "reason": reason}));
    }
}

fn verify(f: &Arc<Field>, exps: &[u64], max_weight: usize, budget: Budget) -> Result<Outcome, Error> {
    let code = CyclicCode::from_zeros(f.clone(), exps)?;
    let n = code.length();
    let w_max = max_weight.min(n);
    let a = brute_weight_distribution(&code, w_max, budget)?;
    let mut checks = Checks { rows: Vec::new(), mismatch: false };

    match weight_distribution_by_encoding(&code, budget) {
        Ok(full) => {
            for w in 0..=w_max {
                let enc = full.get(w as i64).unwrap_or_default();
                checks.compare(format!("A_{w} support enumeration vs encoding"), &a.get(w as i64).unwrap(), &enc);
            }
        }
        Err(e) if e.is_budget() => checks.skip("encoding oracle".into(), e.to_string()),
        Err(e) => return Err(e),
    }

    if w_max >= 2 {
        match CyclicCode::new(f.clone(), exps) {
            Ok(strict) => checks.compare("A_2 formula".into(), &a2_count(&strict)?, &a.get(2).unwrap()),
            Err(e) => checks.skip("A_2 formula".into(), e.to_string()),
        }
    }

    if f.p() == 2 {
        if let ([1, t], true) = (code.exponents(), w_max >= 3) {
            checks.compare(format!("A_3 of C_(1,{t}) by gcd(U_t, x^q + x)"), &a3_c1t(f, *t)?, &a.get(3).unwrap());
        }
        let q = f.q();
        let mut nws = Vec::new();
        for w in 1..=w_max {
            let sys = DiagonalSystem::new(f.clone(), exps, w)?;
            let formula = nw_terms(q, &a, w)?.into_iter().map(|(_, t)| t).sum::<BigUint>();
            match diagonal_count_bruteforce(&sys, budget) {
                Ok(count) => {
                    checks.compare(format!("N_{w} relation vs enumeration"), &formula, &count);
                    if w >= 2 {
                        nws.push(count);
                    }
                }
                Err(e) if e.is_budget() => {
                    checks.skip(format!("N_{w} relation vs enumeration"), format!("{} tuples", diagonal_cost(&sys)));
                    break;
                }
                Err(e) => return Err(e),
            }
        }
        if !nws.is_empty() {
            let top = nws.len() + 1;
            match weights_from_nw(q, &NwSequence::from_arity2(nws)) {
                Ok(back) => {
                    for w in 2..=top {
                        checks.compare(
                            format!("A_{w} from inverted N sequence"),
                            &back.get(w as i64).unwrap(),
                            &a.get(w as i64).unwrap(),
                        );
                    }
                }
                Err(e) => {
                    checks.mismatch = true;
                    checks.rows.push(json!({"check": "inversion", "status": "mismatch", "reason": e.to_string()}));
                }
            }
        }
    }

    let mut r = Report::new(Method::Bruteforce).field(f).exponents(code.exponents());
    r.set("A", bigs(a.values()));
    r.set("checks", checks.rows);
    r.set("all_agree", !checks.mismatch);
    Ok(Outcome { report: r, mismatch: checks.mismatch })
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command, Budget(cli.budget)) {
        Ok(outcome) => {
            print!("{}", outcome.report.render(cli.format));
            if outcome.mismatch {
                ExitCode::from(1)
            } else {
                ExitCode::SUCCESS
            }
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(if e.is_budget() { 4 } else { 3 })
        }
    }
}
