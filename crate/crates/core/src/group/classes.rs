use super::Group;

/// Conjugacy classes with their power maps.
///
/// Classes are ordered canonically: the identity class first, then by
/// ascending (class size, minimal element index). Power maps are stored for
/// every exponent modulo the group exponent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassData {
    classes: Vec<Vec<usize>>,
    class_of: Vec<usize>,
    exponent: usize,
    powers: Vec<Vec<usize>>,
    inverse_class: Vec<usize>,
}

impl ClassData {
    pub(crate) fn compute(g: &Group) -> ClassData {
        let n = g.order();
        let mut class_of = vec![usize::MAX; n];
        let mut raw: Vec<Vec<usize>> = Vec::new();
        for x in 0..n {
            if class_of[x] != usize::MAX {
                continue;
            }
            let idx = raw.len();
            let mut members = Vec::new();
            for h in 0..n {
                let y = g.conj(h, x);
                if class_of[y] == usize::MAX {
                    class_of[y] = idx;
                    members.push(y);
                }
            }
            members.sort_unstable();
            raw.push(members);
        }
        // members are sorted, so members[0] is the minimal representative
        raw.sort_by_key(|c| (c[0] != 0, c.len(), c[0]));
        for (i, c) in raw.iter().enumerate() {
            for &x in c {
                class_of[x] = i;
            }
        }
        let exponent = g.exponent();
        let powers = raw
            .iter()
            .map(|c| {
                let rep = c[0];
                let mut out = Vec::with_capacity(exponent);
                let mut acc = 0;
                for _ in 0..exponent {
                    out.push(class_of[acc]);
                    acc = g.mul(acc, rep);
                }
                out
            })
            .collect::<Vec<_>>();
        let inverse_class = raw.iter().map(|c| class_of[g.inv(c[0])]).collect();
        ClassData { classes: raw, class_of, exponent, powers, inverse_class }
    }

    pub fn len(&self) -> usize {
        self.classes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.classes.is_empty()
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    pub fn class(&self, c: usize) -> &[usize] {
        &self.classes[c]
    }

    pub fn class_of(&self, x: usize) -> usize {
        self.class_of[x]
    }

    pub fn size(&self, c: usize) -> usize {
        self.classes[c].len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn representative(&self, c: usize) -> usize {
        self.classes[c][0]
    }

    pub fn representatives(&self) -> Vec<usize> {
        self.classes.iter().map(|c| c[0]).collect()
    }

    /// Class containing the `k`-th powers of the elements of class `c`.
    pub fn power_map(&self, c: usize, k: i64) -> usize {
        self.powers[c][k.rem_euclid(self.exponent as i64) as usize]
    }

    /// Class of inverses; shorthand for `power_map(c, -1)`.
    pub fn inverse(&self, c: usize) -> usize {
        self.inverse_class[c]
    }

    pub fn exponent(&self) -> usize {
        self.exponent
    }
}
