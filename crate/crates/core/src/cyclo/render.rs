use std::cmp::Reverse;
use std::sync::Arc;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::element::RingElement;
use super::ring::{weight_degree, RingSpec};
use super::RingError;
use crate::scalar::Coefficient;

/// A named part weight `2cos(π/part_size)` used when printing elements.
#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct Generator {
    pub name: String,
    pub part_size: usize,
}

impl Generator {
    pub fn new(name: impl Into<String>, part_size: usize) -> Self {
        Self { name: name.into(), part_size }
    }
}

fn generators_with(sizes: impl IntoIterator<Item = usize>, four: &str) -> Vec<Generator> {
    let mut sizes: Vec<usize> = sizes.into_iter().filter(|&n| n > 3).collect();
    sizes.sort_unstable();
    sizes.dedup();
    sizes
        .into_iter()
        .map(|n| match n {
            4 => Generator::new(four, 4),
            5 => Generator::new("t", 5),
            _ => Generator::new(format!("g{n}"), n),
        })
        .collect()
}

/// `s` for √2, `t` for the golden ratio, `g<n>` otherwise; triangles need no name.
pub fn default_generators(part_sizes: impl IntoIterator<Item = usize>) -> Vec<Generator> {
    generators_with(part_sizes, "s")
}

/// Like [`default_generators`] but prints √2 literally.
pub fn unicode_generators(part_sizes: impl IntoIterator<Item = usize>) -> Vec<Generator> {
    generators_with(part_sizes, "√2")
}

type Column = Vec<BigRational>;

fn to_column<T: Coefficient>(e: &RingElement<T>) -> Column {
    e.coeffs().iter().map(|c| BigRational::from_integer(c.to_bigint())).collect()
}

/// Solves `Σ x_j columns[j] = target` exactly. `None` if inconsistent; free
/// variables are set to zero.
fn solve(columns: &[Column], target: &Column) -> Option<Vec<BigRational>> {
    let rows = target.len();
    let k = columns.len();
    let mut m: Vec<Vec<BigRational>> = (0..rows)
        .map(|r| {
            let mut row: Vec<_> = columns.iter().map(|c| c[r].clone()).collect();
            row.push(target[r].clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..k {
        let Some(p) = (r..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(r, p);
        let inv = m[r][col].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        for i in 0..rows {
            if i != r && !m[i][col].is_zero() {
                let f = m[i][col].clone();
                for j in col..=k {
                    let t = &f * &m[r][j];
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        pivots.push(col);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[k].is_zero()) {
        return None;
    }
    let mut x = vec![BigRational::zero(); k];
    for (i, &col) in pivots.iter().enumerate() {
        x[col] = m[i][k].clone();
    }
    Some(x)
}

fn rank(columns: &[Column]) -> usize {
    let Some(rows) = columns.first().map(Vec::len) else { return 0 };
    let mut m: Vec<Vec<BigRational>> =
        (0..rows).map(|r| columns.iter().map(|c| c[r].clone()).collect()).collect();
    let mut rank = 0;
    for col in 0..columns.len() {
        let Some(p) = (rank..rows).find(|&i| !m[i][col].is_zero()) else { continue };
        m.swap(rank, p);
        for i in rank + 1..rows {
            if !m[i][col].is_zero() {
                let f = &m[i][col] / &m[rank][col];
                for j in col..columns.len() {
                    let t = &f * &m[rank][j];
                    m[i][j] = &m[i][j] - t;
                }
            }
        }
        rank += 1;
    }
    rank
}

#[derive(Clone, Debug)]
struct Monomial {
    exponents: Vec<u32>,
    column: Column,
}

/// Prints ring elements as rational combinations of generator monomials,
/// e.g. `t+2st`, falling back to a polynomial in `c`.
#[derive(Clone, Debug)]
pub struct Renderer<T> {
    ring: Arc<RingSpec<T>>,
    generators: Vec<Generator>,
    basis: Vec<Monomial>,
    power_basis: Vec<Monomial>,
}

impl<T: Coefficient> Renderer<T> {
    pub fn new(ring: &Arc<RingSpec<T>>, generators: Vec<Generator>) -> Result<Self, RingError> {
        let weights = generators
            .iter()
            .map(|g| ring.part_weight(g.part_size))
            .collect::<Result<Vec<_>, _>>()?;
        let degrees: Vec<u32> = generators.iter().map(|g| weight_degree(g.part_size) as u32).collect();

        let mut exps: Vec<Vec<u32>> = vec![vec![]];
        for &d in &degrees {
            exps = exps
                .into_iter()
                .flat_map(|e| {
                    (0..d).map(move |k| {
                        let mut e = e.clone();
                        e.push(k);
                        e
                    })
                })
                .collect();
        }
        exps.sort_by_key(|e| (e.iter().sum::<u32>(), Reverse(e.clone())));

        // Greedy: keep monomials independent of the ones already kept.
        let mut basis: Vec<Monomial> = Vec::new();
        for e in exps {
            let value = e
                .iter()
                .zip(&weights)
                .fold(ring.one(), |acc, (&k, w)| &acc * &w.pow(k));
            let column = to_column(&value);
            let mut trial: Vec<Column> = basis.iter().map(|m| m.column.clone()).collect();
            trial.push(column.clone());
            if rank(&trial) == trial.len() {
                basis.push(Monomial { exponents: e, column });
            }
        }

        let d = ring.degree();
        let power_basis = (0..d)
            .map(|k| {
                let mut column = vec![BigRational::zero(); d];
                column[k] = BigRational::one();
                Monomial { exponents: vec![k as u32], column }
            })
            .collect();
        Ok(Self { ring: ring.clone(), generators, basis, power_basis })
    }

    pub fn generators(&self) -> &[Generator] {
        &self.generators
    }

    fn separator(&self, names: &[&str]) -> &'static str {
        if names.iter().all(|n| n.chars().count() == 1) {
            ""
        } else if names.iter().any(|n| !n.is_ascii()) {
            "·"
        } else {
            "*"
        }
    }

    fn format_terms(&self, terms: &[(BigRational, Vec<u32>)], names: &[&str]) -> String {
        let sep = self.separator(names);
        let mut out = String::new();
        for (coef, exps) in terms {
            if coef.is_zero() {
                continue;
            }
            let factors: Vec<String> = exps
                .iter()
                .zip(names)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, n)| if e == 1 { n.to_string() } else { format!("{n}^{e}") })
                .collect();
            let mono = factors.join(sep);
            if coef.is_negative() {
                out.push('-');
            } else if !out.is_empty() {
                out.push('+');
            }
            let mag = coef.abs();
            if mono.is_empty() {
                out.push_str(&mag.to_string());
            } else {
                if mag.is_integer() {
                    if !mag.is_one() {
                        out.push_str(&mag.to_string());
                    }
                } else {
                    out.push_str(&format!("({mag})"));
                }
                out.push_str(&mono);
            }
        }
        if out.is_empty() {
            out.push('0');
        }
        out
    }

    /// The monomial combination if the generators span the element, else `None`.
    pub fn render_combination(&self, a: &RingElement<T>) -> Option<String> {
        let columns: Vec<Column> = self.basis.iter().map(|m| m.column.clone()).collect();
        let x = solve(&columns, &to_column(a))?;
        let terms: Vec<_> = x.into_iter().zip(self.basis.iter().map(|m| m.exponents.clone())).collect();
        let names: Vec<&str> = self.generators.iter().map(|g| g.name.as_str()).collect();
        Some(self.format_terms(&terms, &names))
    }

    /// Polynomial in `c` with the conductor annotated, e.g. `1+c^2 [N=7]`.
    pub fn render_power_basis(&self, a: &RingElement<T>) -> String {
        let terms: Vec<_> = a
            .coeffs()
            .iter()
            .zip(&self.power_basis)
            .map(|(k, m)| (BigRational::from_integer(k.to_bigint()), m.exponents.clone()))
            .collect();
        format!("{} [N={}]", self.format_terms(&terms, &["c"]), self.ring.conductor())
    }

    pub fn render(&self, a: &RingElement<T>) -> String {
        self.render_combination(a).unwrap_or_else(|| self.render_power_basis(a))
    }
}

fn parse_err(text: &str, reason: impl Into<String>) -> RingError {
    RingError::Parse { text: text.to_string(), reason: reason.into() }
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let trimmed = self.rest().trim_start();
        self.pos = self.text.len() - trimmed.len();
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn number(&mut self) -> Option<BigInt> {
        self.skip_ws();
        let len = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if len == 0 {
            return None;
        }
        let n = self.rest()[..len].parse().ok();
        self.pos += len;
        n
    }
}

/// Parses output of [`Renderer::render`] back into a ring element.
pub fn parse_rendered<T: Coefficient>(
    text: &str,
    ring: &Arc<RingSpec<T>>,
    generators: &[Generator],
) -> Result<RingElement<T>, RingError> {
    let trimmed = text.trim();
    let (body, gens): (&str, Vec<Generator>) = match trimmed.strip_suffix(']').and_then(|s| s.rsplit_once("[N=")) {
        Some((body, n)) => {
            let n: usize = n.trim().parse().map_err(|_| parse_err(text, "bad conductor annotation"))?;
            if n != ring.conductor() {
                return Err(RingError::SpecMismatch { left: n, right: ring.conductor() });
            }
            (body, vec![Generator::new("c", n)])
        }
        None => (trimmed, generators.to_vec()),
    };
    let weights = gens.iter().map(|g| ring.part_weight(g.part_size)).collect::<Result<Vec<_>, _>>()?;
    let mut order: Vec<usize> = (0..gens.len()).collect();
    order.sort_by_key(|&i| Reverse(gens[i].name.len()));

    let d = ring.degree();
    let mut acc = vec![BigRational::zero(); d];
    let mut cur = Cursor { text: body, pos: 0 };
    let mut first = true;
    loop {
        cur.skip_ws();
        if cur.rest().is_empty() {
            break;
        }
        let negative = if cur.eat("-") {
            true
        } else if cur.eat("+") || first {
            false
        } else {
            return Err(parse_err(text, format!("expected '+' or '-' at {}", cur.pos)));
        };
        first = false;

        let mut coef = BigRational::one();
        let mut have_coef = false;
        if cur.eat("(") {
            let p = cur.number().ok_or_else(|| parse_err(text, "expected numerator"))?;
            if !cur.eat("/") {
                return Err(parse_err(text, "expected '/'"));
            }
            let q = cur.number().ok_or_else(|| parse_err(text, "expected denominator"))?;
            if q.is_zero() || !cur.eat(")") {
                return Err(parse_err(text, "bad rational coefficient"));
            }
            coef = BigRational::new(p, q);
            have_coef = true;
        } else if let Some(p) = cur.number() {
            coef = BigRational::from_integer(p);
            if cur.eat("/") {
                let q = cur.number().ok_or_else(|| parse_err(text, "expected denominator"))?;
                if q.is_zero() {
                    return Err(parse_err(text, "zero denominator"));
                }
                coef /= BigRational::from_integer(q);
            }
            have_coef = true;
        }

        let mut value = ring.one();
        let mut have_factor = false;
        loop {
            let save = cur.pos;
            if have_factor && !(cur.eat("*") || cur.eat("·")) {
                cur.pos = save;
            }
            cur.skip_ws();
            let Some(&g) = order.iter().find(|&&i| cur.rest().starts_with(gens[i].name.as_str())) else {
                cur.pos = save;
                break;
            };
            cur.pos += gens[g].name.len();
            let e = if cur.eat("^") {
                cur.number()
                    .and_then(|n| u32::try_from(n).ok())
                    .ok_or_else(|| parse_err(text, "bad exponent"))?
            } else {
                1
            };
            value = &value * &weights[g].pow(e);
            have_factor = true;
        }
        if !have_coef && !have_factor {
            return Err(parse_err(text, format!("expected a term at {}", cur.pos)));
        }
        if negative {
            coef = -coef;
        }
        for (slot, v) in acc.iter_mut().zip(to_column(&value)) {
            *slot += &coef * v;
        }
    }
    let coeffs = acc
        .into_iter()
        .map(|r| {
            if !r.is_integer() {
                return Err(parse_err(text, "value is not in the ring"));
            }
            T::from_bigint(&r.to_integer()).ok_or(RingError::Overflow)
        })
        .collect::<Result<Vec<T>, _>>()?;
    RingElement::from_coeffs(ring, coeffs)
}
