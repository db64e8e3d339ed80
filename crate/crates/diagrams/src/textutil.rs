//! Shared text-format plumbing: `n=4; [1 3][2 6']` style block lists.
//!
//! A token is a 1-based vertex number, primed for right-hand diagram vertices. Primed
//! tokens are accepted in two equivalent spellings: the offset form `6'` (meaning
//! stored vertex n+2 when n=4) and the logical form `2'`; the printer always emits the
//! offset form, matching how assembled diagrams number their right side.

use crate::DiagramError;

/// One parsed vertex token: its printed number and whether it carried a prime.
#[derive(Debug, Clone, Copy)]
pub struct Token {
    pub value: usize,
    pub primed: bool,
}

/// Split `n=<k>; [..][..]` into the size and the bracketed blocks of tokens.
pub fn parse_blocks(s: &str) -> Result<(usize, Vec<Vec<Token>>), DiagramError> {
    let s = s.trim();
    let err = |m: &str| DiagramError::Parse(m.to_string());
    let rest = s.strip_prefix("n=").ok_or_else(|| err("expected leading `n=<size>;`"))?;
    let (num, body) = rest
        .split_once(';')
        .ok_or_else(|| err("expected `;` after size"))?;
    let n: usize = num
        .trim()
        .parse()
        .map_err(|_| err(&format!("bad size `{}`", num.trim())))?;
    let mut blocks = Vec::new();
    let body = body.trim();
    let mut chars = body.char_indices().peekable();
    while let Some((start, c)) = chars.next() {
        if c.is_whitespace() {
            continue;
        }
        if c != '[' {
            return Err(err(&format!("unexpected `{c}` outside block")));
        }
        let close = body[start + 1..]
            .find(']')
            .ok_or_else(|| err("unclosed `[`"))?;
        let inner = &body[start + 1..start + 1 + close];
        let mut block = Vec::new();
        for tok in inner.split_whitespace() {
            let (digits, primed) = match tok.strip_suffix('\'') {
                Some(d) => (d, true),
                None => (tok, false),
            };
            let value: usize = digits
                .parse()
                .map_err(|_| err(&format!("bad vertex token `{tok}`")))?;
            block.push(Token { value, primed });
        }
        if block.is_empty() {
            return Err(err("empty block"));
        }
        blocks.push(block);
        // Skip ahead past the consumed block.
        while let Some(&(i, _)) = chars.peek() {
            if i <= start + close + 1 {
                chars.next();
            } else {
                break;
            }
        }
    }
    Ok((n, blocks))
}

/// Resolve a token to a stored vertex index in `0..2n`: unprimed `k` ↦ k−1;
/// primed accepts `k'` with k ≤ n (logical) or n < k ≤ 2n (offset), both ↦ n+(k mod n)−….
pub fn resolve_diagram_token(t: Token, n: usize) -> Result<usize, DiagramError> {
    let err = |m: String| DiagramError::Parse(m);
    if t.value == 0 {
        return Err(err("vertex numbers are 1-based".into()));
    }
    if !t.primed {
        if t.value > n {
            return Err(err(format!("unprimed vertex {} exceeds n={n}", t.value)));
        }
        Ok(t.value - 1)
    } else if t.value <= n {
        Ok(n + t.value - 1)
    } else if t.value <= 2 * n {
        Ok(t.value - 1)
    } else {
        Err(err(format!("primed vertex {}' exceeds 2n={}", t.value, 2 * n)))
    }
}

/// Resolve a token for a link state (no primes allowed), to `0..n`.
pub fn resolve_state_token(t: Token, n: usize) -> Result<usize, DiagramError> {
    if t.primed {
        return Err(DiagramError::Parse("link states have no primed vertices".into()));
    }
    if t.value == 0 || t.value > n {
        return Err(DiagramError::Parse(format!("vertex {} out of range 1..={n}", t.value)));
    }
    Ok(t.value - 1)
}

/// Render a stored diagram vertex (0..2n) as a token: offset form with prime for the
/// right side, e.g. n=4 stored 5 ↦ `6'`.
pub fn render_diagram_vertex(v: usize, n: usize) -> String {
    if v < n {
        format!("{}", v + 1)
    } else {
        format!("{}'", v + 1)
    }
}
