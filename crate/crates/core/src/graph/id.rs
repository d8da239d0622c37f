use std::fmt;
use std::str::FromStr;

/// Structured vertex identifier. The rendered form is what appears in JSON
/// and DOT output:
///
/// | variant   | rendering            |
/// |-----------|----------------------|
/// | `Raw`     | `7`                  |
/// | `P`       | `P(i)`               |
/// | `T`       | `T(i,j)`             |
/// | `S`       | `S(i,j,l)`           |
/// | `Point`   | `pt(a)`              |
/// | `Pair`    | `pr([c..],{x,y})`    |
/// | `Base2`   | `b2([c..],{x,y},s)`  |
/// | `Chamber` | `C(v,w,t)`           |
/// | `Gadget`  | `UE(v,w,j)`/`UV(v,j)`|
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VertexId {
    Raw(u64),
    P(usize),
    T(usize, usize),
    S(usize, usize, usize),
    Point(usize),
    Pair {
        chain: Vec<usize>,
        pair: (usize, usize),
    },
    Base2 {
        chain: Vec<usize>,
        pair: (usize, usize),
        slot: u8,
    },
    Chamber {
        edge: Box<(VertexId, VertexId)>,
        ty: usize,
    },
    Gadget {
        owner: Box<GadgetOwner>,
        j: usize,
    },
}

/// What a refinement ray hangs off: a subdivided edge or a low-degree vertex.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum GadgetOwner {
    Edge(VertexId, VertexId),
    Vertex(VertexId),
}

impl VertexId {
    pub fn chamber(a: &VertexId, b: &VertexId, ty: usize) -> Self {
        let (a, b) = if a <= b { (a, b) } else { (b, a) };
        VertexId::Chamber {
            edge: Box::new((a.clone(), b.clone())),
            ty,
        }
    }

    pub fn gadget(owner: GadgetOwner, j: usize) -> Self {
        VertexId::Gadget {
            owner: Box::new(owner),
            j,
        }
    }

    /// Unordered pair stored with the smaller element first.
    pub fn pair(chain: Vec<usize>, x: usize, y: usize) -> Self {
        VertexId::Pair {
            chain,
            pair: (x.min(y), x.max(y)),
        }
    }

    pub fn base2(chain: Vec<usize>, x: usize, y: usize, slot: u8) -> Self {
        VertexId::Base2 {
            chain,
            pair: (x.min(y), x.max(y)),
            slot,
        }
    }
}

fn write_list(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    f.write_str("[")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    f.write_str("]")
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VertexId::Raw(n) => write!(f, "{n}"),
            VertexId::P(i) => write!(f, "P({i})"),
            VertexId::T(i, j) => write!(f, "T({i},{j})"),
            VertexId::S(i, j, l) => write!(f, "S({i},{j},{l})"),
            VertexId::Point(a) => write!(f, "pt({a})"),
            VertexId::Pair { chain, pair } => {
                f.write_str("pr(")?;
                write_list(f, chain)?;
                write!(f, ",{{{},{}}})", pair.0, pair.1)
            }
            VertexId::Base2 { chain, pair, slot } => {
                f.write_str("b2(")?;
                write_list(f, chain)?;
                write!(f, ",{{{},{}}},{slot})", pair.0, pair.1)
            }
            VertexId::Chamber { edge, ty } => write!(f, "C({},{},{ty})", edge.0, edge.1),
            VertexId::Gadget { owner, j } => match owner.as_ref() {
                GadgetOwner::Edge(a, b) => write!(f, "UE({a},{b},{j})"),
                GadgetOwner::Vertex(a) => write!(f, "UV({a},{j})"),
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("malformed vertex id {input:?} at byte {pos}")]
pub struct IdParseError {
    pub input: String,
    pub pos: usize,
}

struct Parser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl Parser<'_> {
    fn fail<T>(&self) -> Result<T, usize> {
        Err(self.pos)
    }

    fn eat(&mut self, c: u8) -> Result<(), usize> {
        if self.s.get(self.pos) == Some(&c) {
            self.pos += 1;
            Ok(())
        } else {
            self.fail()
        }
    }

    fn number(&mut self) -> Result<u64, usize> {
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            self.pos += 1;
        }
        if start == self.pos {
            return self.fail();
        }
        std::str::from_utf8(&self.s[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| start)
    }

    fn index(&mut self) -> Result<usize, usize> {
        let at = self.pos;
        usize::try_from(self.number()?).map_err(|_| at)
    }

    fn list(&mut self) -> Result<Vec<usize>, usize> {
        self.eat(b'[')?;
        let mut out = Vec::new();
        if self.eat(b']').is_ok() {
            return Ok(out);
        }
        loop {
            out.push(self.index()?);
            if self.eat(b']').is_ok() {
                return Ok(out);
            }
            self.eat(b',')?;
        }
    }

    fn set2(&mut self) -> Result<(usize, usize), usize> {
        self.eat(b'{')?;
        let x = self.index()?;
        self.eat(b',')?;
        let y = self.index()?;
        self.eat(b'}')?;
        Ok((x, y))
    }

    fn tag(&mut self) -> &[u8] {
        let start = self.pos;
        if self.s.get(self.pos).is_some_and(u8::is_ascii_alphabetic) {
            while self.s.get(self.pos).is_some_and(u8::is_ascii_alphanumeric) {
                self.pos += 1;
            }
        }
        &self.s[start..self.pos]
    }

    fn id(&mut self) -> Result<VertexId, usize> {
        if self.s.get(self.pos).is_some_and(u8::is_ascii_digit) {
            return Ok(VertexId::Raw(self.number()?));
        }
        let tag_start = self.pos;
        let tag = self.tag().to_vec();
        self.eat(b'(')?;
        let id = match tag.as_slice() {
            b"P" => VertexId::P(self.index()?),
            b"T" => {
                let i = self.index()?;
                self.eat(b',')?;
                VertexId::T(i, self.index()?)
            }
            b"S" => {
                let i = self.index()?;
                self.eat(b',')?;
                let j = self.index()?;
                self.eat(b',')?;
                VertexId::S(i, j, self.index()?)
            }
            b"pt" => VertexId::Point(self.index()?),
            b"pr" => {
                let chain = self.list()?;
                self.eat(b',')?;
                let pair = self.set2()?;
                VertexId::Pair { chain, pair }
            }
            b"b2" => {
                let chain = self.list()?;
                self.eat(b',')?;
                let pair = self.set2()?;
                self.eat(b',')?;
                let at = self.pos;
                let slot = u8::try_from(self.number()?).map_err(|_| at)?;
                VertexId::Base2 { chain, pair, slot }
            }
            b"C" => {
                let a = self.id()?;
                self.eat(b',')?;
                let b = self.id()?;
                self.eat(b',')?;
                VertexId::Chamber {
                    edge: Box::new((a, b)),
                    ty: self.index()?,
                }
            }
            b"UE" => {
                let a = self.id()?;
                self.eat(b',')?;
                let b = self.id()?;
                self.eat(b',')?;
                VertexId::gadget(GadgetOwner::Edge(a, b), self.index()?)
            }
            b"UV" => {
                let a = self.id()?;
                self.eat(b',')?;
                VertexId::gadget(GadgetOwner::Vertex(a), self.index()?)
            }
            _ => return Err(tag_start),
        };
        self.eat(b')')?;
        Ok(id)
    }
}

impl FromStr for VertexId {
    type Err = IdParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut p = Parser {
            s: s.as_bytes(),
            pos: 0,
        };
        let err = |pos| IdParseError {
            input: s.to_string(),
            pos,
        };
        let id = p.id().map_err(err)?;
        if p.pos != s.len() {
            return Err(err(p.pos));
        }
        Ok(id)
    }
}
