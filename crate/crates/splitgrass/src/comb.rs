//! Small combinatorial helpers shared across modules.

/// Binomial coefficient C(n, k) as u64; returns 0 when k > n.
///
/// Panics on overflow, which cannot happen for the supported parameter window.
pub fn binomial(n: usize, k: usize) -> u64 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    u64::try_from(acc).expect("binomial coefficient overflows u64")
}

/// Multinomial coefficient (sum of exponents)! / prod(exponent!).
pub fn multinomial(exponents: &[u32]) -> u64 {
    let mut acc: u128 = 1;
    let mut seen: u128 = 0;
    for &e in exponents {
        for j in 1..=e as u128 {
            seen += 1;
            acc = acc * seen / j;
        }
    }
    u64::try_from(acc).expect("multinomial coefficient overflows u64")
}

/// All strictly increasing k-tuples drawn from 0..m, in lexicographic order.
pub fn increasing_tuples(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    if k > m {
        return out;
    }
    let mut cur: Vec<usize> = (0..k).collect();
    loop {
        out.push(cur.clone());
        // rightmost slot that is still below its maximum value m - k + i
        let Some(i) = (0..k).rfind(|&i| cur[i] < m - k + i) else {
            return out;
        };
        cur[i] += 1;
        for j in i + 1..k {
            cur[j] = cur[j - 1] + 1;
        }
    }
}

/// All exponent tuples of length `nvars` with entries summing to `degree`,
/// in graded-lex order with the first variable largest: (d,0,..,0) first,
/// (0,..,0,d) last.
pub fn exponent_tuples(nvars: usize, degree: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    fill(&mut out, &mut cur, 0, degree);
    fn fill(out: &mut Vec<Vec<u32>>, cur: &mut Vec<u32>, pos: usize, rem: u32) {
        if pos + 1 == cur.len() {
            cur[pos] = rem;
            out.push(cur.clone());
            return;
        }
        // descending exponent for the current variable gives graded-lex order
        for e in (0..=rem).rev() {
            cur[pos] = e;
            fill(out, cur, pos + 1, rem - e);
        }
        cur[pos] = 0;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn binomial_values() {
        assert_eq!(binomial(7, 3), 35);
        assert_eq!(binomial(12, 6), 924);
        assert_eq!(binomial(1, 2), 0);
        assert_eq!(binomial(5, 0), 1);
        assert_eq!(binomial(3, 2), 3);
        assert_eq!(binomial(6, 2), 15);
    }

    #[test]
    fn multinomial_values() {
        assert_eq!(multinomial(&[3, 0, 0]), 1);
        assert_eq!(multinomial(&[2, 1, 0]), 3);
        assert_eq!(multinomial(&[1, 1, 1]), 6);
        assert_eq!(multinomial(&[2, 2]), 6);
    }

    #[test]
    fn tuples_lex_order() {
        let t = increasing_tuples(5, 3);
        assert_eq!(t.len(), 10);
        assert_eq!(t[0], vec![0, 1, 2]);
        assert_eq!(t[1], vec![0, 1, 3]);
        assert_eq!(t[9], vec![2, 3, 4]);
    }

    #[test]
    fn tuples_degenerate() {
        assert_eq!(increasing_tuples(3, 0), vec![Vec::<usize>::new()]);
        assert!(increasing_tuples(2, 3).is_empty());
    }

    #[test]
    fn exponents_graded_lex() {
        let e = exponent_tuples(3, 3);
        assert_eq!(e.len(), 10);
        assert_eq!(e[0], vec![3, 0, 0]);
        assert_eq!(e[1], vec![2, 1, 0]);
        assert_eq!(e[2], vec![2, 0, 1]);
        assert_eq!(e[3], vec![1, 2, 0]);
        assert_eq!(e[9], vec![0, 0, 3]);
    }
}
