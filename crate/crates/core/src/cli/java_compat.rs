//! Replica of the original Java console program.
//!
//! The program reads `n`, then `2n` integers, then `N K`, and prints
//! `epsilon[N][K]` from a 0-based table where `epsilon[i][k]` holds ε_{k+1}
//! of the first `i+1` inputs. Integers are read as 32-bit values and all
//! arithmetic wraps at 64 bits. Failures mirror the JVM: stdout keeps
//! whatever was printed before the exception, and the exception line goes
//! to stderr.

use std::fmt;
use std::io::{self, BufRead, Write};

use crate::scalar::{ComplexRing, Wrap64Complex};

pub const PROMPT_COUNT: &str = "Enter number of generating variables: ";
pub const PROMPT_VALUES: &str =
    "Enter the values of the n generators as a white space separating list: ";
pub const PROMPT_QUERY: &str = "Enter the values of n and k for the desired iteration: ";

/// An uncaught exception of the reference program.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum JavaException {
    InputMismatch(String),
    NoSuchElement,
    NegativeArraySize(i32),
    ArrayIndexOutOfBounds(i32),
    Io(String),
}

impl fmt::Display for JavaException {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("Exception in thread \"main\" ")?;
        match self {
            JavaException::InputMismatch(token) => {
                write!(f, "java.util.InputMismatchException: For input string: \"{token}\"")
            }
            JavaException::NoSuchElement => f.write_str("java.util.NoSuchElementException"),
            JavaException::NegativeArraySize(n) => {
                write!(f, "java.lang.NegativeArraySizeException: {n}")
            }
            JavaException::ArrayIndexOutOfBounds(i) => {
                write!(f, "java.lang.ArrayIndexOutOfBoundsException: {i}")
            }
            JavaException::Io(msg) => write!(f, "java.io.IOException: {msg}"),
        }
    }
}

impl From<io::Error> for JavaException {
    fn from(e: io::Error) -> Self {
        JavaException::Io(e.to_string())
    }
}

/// Whitespace tokenizer that pulls lines only when a token is needed, so
/// prompts appear before the program blocks on input.
struct Tokens<R> {
    input: R,
    pending: Vec<String>,
}

impl<R: BufRead> Tokens<R> {
    fn new(input: R) -> Self {
        Self {
            input,
            pending: Vec::new(),
        }
    }

    fn next_int(&mut self) -> Result<i32, JavaException> {
        while self.pending.is_empty() {
            let mut line = String::new();
            if self.input.read_line(&mut line)? == 0 {
                return Err(JavaException::NoSuchElement);
            }
            self.pending = line.split_whitespace().rev().map(str::to_string).collect();
        }
        let token = self.pending.pop().expect("non-empty");
        parse_java_int(&token).ok_or(JavaException::InputMismatch(token))
    }
}

/// `Scanner.nextInt` acceptance: optional sign, ASCII digits, 32-bit range.
fn parse_java_int(token: &str) -> Option<i32> {
    let digits = token.strip_prefix(['+', '-']).unwrap_or(token);
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    token.parse().ok()
}

fn flush_print<W: Write>(out: &mut W, text: &str) -> Result<(), JavaException> {
    out.write_all(text.as_bytes())?;
    out.flush()?;
    Ok(())
}

/// Run the program against `input`, writing its stdout to `out`.
pub fn run<R: BufRead, W: Write>(input: R, out: &mut W) -> Result<(), JavaException> {
    let mut tokens = Tokens::new(input);

    flush_print(out, PROMPT_COUNT)?;
    let n = tokens.next_int()?;
    flush_print(out, "\n")?;

    flush_print(out, PROMPT_VALUES)?;
    if n < 0 {
        return Err(JavaException::NegativeArraySize(n));
    }
    let mut xs = Vec::with_capacity(n as usize);
    for _ in 0..n {
        let re = tokens.next_int()?;
        let im = tokens.next_int()?;
        xs.push(Wrap64Complex::new(re.into(), im.into()));
    }
    flush_print(out, "\n")?;

    if xs.is_empty() {
        // epsilon[0][0] = X[0] on a zero-length array.
        return Err(JavaException::ArrayIndexOutOfBounds(0));
    }
    let mut epsilon: Vec<Vec<Wrap64Complex>> = vec![vec![xs[0]]];
    for i in 1..xs.len() {
        let prev = &epsilon[i - 1];
        let row = (0..=i)
            .map(|k| {
                if k == 0 {
                    prev[k].add(&xs[i])
                } else if k > i - 1 {
                    prev[k - 1].mul(&xs[i])
                } else {
                    prev[k].add(&prev[k - 1].mul(&xs[i]))
                }
            })
            .collect();
        epsilon.push(row);
    }

    flush_print(out, PROMPT_QUERY)?;
    let big_n = tokens.next_int()?.wrapping_sub(1);
    let big_k = tokens.next_int()?.wrapping_sub(1);
    flush_print(out, "\n")?;

    let row = usize::try_from(big_n)
        .ok()
        .and_then(|i| epsilon.get(i))
        .ok_or(JavaException::ArrayIndexOutOfBounds(big_n))?;
    let value = usize::try_from(big_k)
        .ok()
        .and_then(|k| row.get(k))
        .ok_or(JavaException::ArrayIndexOutOfBounds(big_k))?;
    flush_print(
        out,
        &format!(
            "epsilon[{}][{}] = ({},{})\n",
            big_n.wrapping_add(1),
            big_k.wrapping_add(1),
            value.re,
            value.im
        ),
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn transcript(stdin: &str) -> (String, Result<(), JavaException>) {
        let mut out = Vec::new();
        let result = run(stdin.as_bytes(), &mut out);
        (String::from_utf8(out).unwrap(), result)
    }

    fn prefix() -> String {
        format!("{PROMPT_COUNT}\n{PROMPT_VALUES}\n{PROMPT_QUERY}\n")
    }

    #[test]
    fn product_case() {
        let (out, result) = transcript("2\n1 2 3 4\n2 2\n");
        assert!(result.is_ok());
        assert_eq!(out, format!("{}epsilon[2][2] = (-5,10)\n", prefix()));
    }

    #[test]
    fn sum_and_single() {
        assert!(transcript("2\n1 2 3 4\n2 1\n").0.ends_with("epsilon[2][1] = (4,6)\n"));
        assert!(transcript("1\n7 0\n1 1\n").0.ends_with("epsilon[1][1] = (7,0)\n"));
    }

    #[test]
    fn tokens_may_span_lines_arbitrarily() {
        let (a, _) = transcript("2 1 2 3 4 2 2");
        let (b, _) = transcript("2\n1\n2\n3\n\n4\n2\n2\n");
        assert_eq!(a, b);
    }

    #[test]
    fn failures_match_the_jvm() {
        let (out, r) = transcript("x\n");
        assert_eq!(out, PROMPT_COUNT);
        assert_eq!(r, Err(JavaException::InputMismatch("x".into())));

        let (_, r) = transcript("1\n2147483648 0\n");
        assert!(matches!(r, Err(JavaException::InputMismatch(_))));

        let (out, r) = transcript("-1\n");
        assert_eq!(out, format!("{PROMPT_COUNT}\n{PROMPT_VALUES}"));
        assert_eq!(r, Err(JavaException::NegativeArraySize(-1)));

        let (out, r) = transcript("0\n");
        assert_eq!(out, format!("{PROMPT_COUNT}\n{PROMPT_VALUES}\n"));
        assert_eq!(r, Err(JavaException::ArrayIndexOutOfBounds(0)));

        let (out, r) = transcript("2\n1 2 3 4\n3 1\n");
        assert_eq!(out, prefix());
        assert_eq!(r, Err(JavaException::ArrayIndexOutOfBounds(2)));

        let (_, r) = transcript("2\n1 2 3 4\n1 2\n");
        assert_eq!(r, Err(JavaException::ArrayIndexOutOfBounds(1)));

        let (_, r) = transcript("2\n1 2 3 4\n2\n");
        assert_eq!(r, Err(JavaException::NoSuchElement));
    }

    #[test]
    fn int_token_rules() {
        assert_eq!(parse_java_int("+5"), Some(5));
        assert_eq!(parse_java_int("-2147483648"), Some(i32::MIN));
        assert_eq!(parse_java_int("2147483648"), None);
        assert_eq!(parse_java_int("1.0"), None);
        assert_eq!(parse_java_int("-"), None);
    }
}
