#include "affadm/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace affadm {

IntVec mu_vector(const WeylElt& w, long long k) {
  IntVec om = omega(w.n(), k);
  return w.apply(om) - om;
}

Point nu_point(const WeylElt& w, const Point& a) { return w.apply(a) - a; }

Point nu_vector(const Context& ctx, const WeylElt& w,
                const VertexLabel& label) {
  Point a = ctx.point(label);
  return nu_point(w, a);
}

bool is_integral(const Point& p) {
  for (auto& c : p)
    if (!c.is_integer()) return false;
  return true;
}

IntVec to_intvec(const Point& p) {
  IntVec v(p.size());
  for (size_t j = 0; j < p.size(); ++j) {
    if (!p[j].is_integer()) throw std::invalid_argument("non-integral point");
    v[j] = static_cast<int>(p[j].num);
  }
  return v;
}

namespace {
// reduce k to the unique representative in [0, n/2] congruent to +-k mod n
int reduce_k(int n, long long k) {
  long long r = k % n;
  if (r < 0) r += n;
  if (2 * r > n) r = n - r;
  return static_cast<int>(r);
}
}  // namespace

std::vector<int> set_A(int n, long long k) {
  int kk = reduce_k(n, k);
  std::vector<int> out;
  for (int j = 0; j < kk; ++j) out.push_back(j);
  for (int j = n - kk; j < n; ++j) out.push_back(j);
  return out;
}

std::vector<int> set_B(int n, long long k) {
  int kk = reduce_k(n, k);
  std::vector<int> out;
  for (int j = kk; j < n - kk; ++j) out.push_back(j);
  return out;
}

bool sp1_at(const WeylElt& w, long long k) {
  IntVec mu = mu_vector(w, k);
  IntVec mun = mu_vector(w, -k);
  int n = w.n();
  for (int j = 0; j < n; ++j) {
    if (mu[j] < 0 || mu[j] > 2) return false;
    if (mu[j] + mun[dual(n, j)] != 2) return false;
  }
  return true;
}

int c_value(const WeylElt& w, long long k) {
  if (!sp1_at(w, k))
    throw std::invalid_argument("c_value: SP1 fails at k");
  IntVec mu = mu_vector(w, k);
  int twos = 0, zeros = 0;
  for (int x : mu) {
    if (x == 2) ++twos;
    if (x == 0) ++zeros;
  }
  if (twos != zeros) throw std::logic_error("c_value: counts differ");
  return twos;
}

int c_value_from_nu(const Context& ctx, const WeylElt& w, int k) {
  Point nu = nu_vector(ctx, w, VertexLabel(k));
  int twos = 0, nonint = 0;
  for (auto& c : nu) {
    if (c == Rat(2)) ++twos;
    if (!c.is_integer()) ++nonint;
  }
  if (nonint % 4 != 0) throw std::logic_error("c_value_from_nu: bad count");
  return twos + nonint / 4;
}

std::vector<int> upper_values(const WeylElt& w) {
  int n = w.n();
  std::vector<int> u(n);
  IntVec mu = mu_vector(w, 0);
  for (int j = 0; j < n; ++j) u[j] = mu[j];
  for (int k = 1; k <= n; ++k) {
    // recursion mu_k = mu_{k-1} + e_k - e_{sigma(k)} (1-based k)
    mu[k - 1] += 1;
    mu[w.s(k - 1)] -= 1;
    for (int j = 0; j < n; ++j) u[j] = std::max(u[j], mu[j]);
  }
  return u;
}

std::pair<long long, int> kottwitz(const Context& ctx, const WeylElt& w) {
  ctx.require_valid(w);
  int n = ctx.n();
  IntVec ref;
  if (ctx.kind().family == Family::TypeGU) {
    ref = mu_vector(w, ctx.m());
  } else {
    ref = w.v;  // nu_0^w
  }
  int d = 0;
  pair_sums_constant(w.v, &d);
  int par = 0;
  for (int j = 0; j < ctx.m(); ++j) par += ref[j];
  par = ((par % 2) + 2) % 2;
  return {d, par};
}

bool equiv_mod_affine(const Context& ctx, const WeylElt& w, const WeylElt& x) {
  return kottwitz(ctx, w) == kottwitz(ctx, x);
}

IntVec Face::at(long long i) const {
  // reduce into [members.front(), members.front()+n) then use periodicity
  long long lo = members.front();
  long long b = (i - lo) >= 0 ? (i - lo) / n : -((lo - i + n - 1) / n);
  int rep = static_cast<int>(i - b * n);
  auto it = std::lower_bound(members.begin(), members.end(), rep);
  if (it == members.end() || *it != rep)
    throw std::invalid_argument("face: index not in nZ +- I");
  IntVec v = vecs[it - members.begin()];
  for (int& x : v) x -= static_cast<int>(b);
  return v;
}

IntVec Face::mu(long long i) const { return at(i) - omega(n, i); }

Face face_of_type(int n, const IntVec& v, const SignedPerm& s,
                  const std::set<int>& I) {
  if (I.empty()) throw std::invalid_argument("face_of_type: empty I");
  for (int k : I)
    if (k < 0 || 2 * k > n)
      throw std::invalid_argument("face_of_type: invalid index set");
  Face f;
  f.n = n;
  pair_sums_constant(v, &f.d);
  for (int i = 0; i <= n; ++i) {
    int red = reduce_k(n, i);
    if (!I.count(red)) continue;
    f.members.push_back(i);
    IntVec om = omega(n, i);
    f.vecs.push_back(v + s.permute(om));
  }
  return f;
}

Face face_of_type(const WeylElt& w, const std::set<int>& I) {
  return face_of_type(w.n(), w.v, w.s, I);
}

bool face_valid(const Face& f, std::string* why) {
  auto fail = [&](const char* msg) {
    if (why) *why = msg;
    return false;
  };
  int n = f.n;
  size_t cnt = f.members.size();
  if (cnt == 0) return fail("empty");
  // F1 via at(); F2 monotone; F3 adjacency; F4 duality
  for (size_t a = 0; a < cnt; ++a) {
    long long i = f.members[a];
    if (f.at(i + n) != f.at(i) - IntVec(n, 1)) return fail("F1");
    if (sum(f.vecs[a]) + static_cast<int>(i) !=
        sum(f.at(f.members[0])) + f.members[0])
      return fail("F3");
    IntVec dualv = star(f.at(-i));
    for (int j = 0; j < n; ++j)
      if (f.vecs[a][j] + dualv[j] != f.d) return fail("F4");
    if (a + 1 < cnt) {
      IntVec next = f.vecs[a + 1];
      for (int j = 0; j < n; ++j)
        if (f.vecs[a][j] < next[j]) return fail("F2");
    }
  }
  return true;
}

std::string to_string(const WeylElt& w) {
  std::ostringstream os;
  os << "t:[";
  for (size_t j = 0; j < w.v.size(); ++j)
    os << (j ? "," : "") << w.v[j];
  os << "];s:[";
  for (int j = 0; j < w.s.n(); ++j)
    os << (j ? "," : "") << w.s(j) + 1;
  os << "]";
  return os.str();
}

namespace {

std::vector<int> parse_int_list(const std::string& body) {
  std::vector<int> out;
  std::string cur;
  for (char c : body) {
    if (c == ',') {
      out.push_back(std::stoi(cur));
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(std::stoi(cur));
  return out;
}

// "(27)(36)" -> permutation as product of cycles, 1-based entries.  A cycle
// may list multi-digit entries separated by spaces or commas; single digits
// may be juxtaposed, matching the paper's (27)(36) style.
SignedPerm parse_cycles(int n, const std::string& text) {
  auto p = SignedPerm::identity(n);
  size_t pos = 0;
  while (pos < text.size()) {
    if (text[pos] != '(')
      throw std::invalid_argument("bad cycle notation: " + text);
    size_t close = text.find(')', pos);
    if (close == std::string::npos)
      throw std::invalid_argument("unbalanced cycle: " + text);
    std::string body = text.substr(pos + 1, close - pos - 1);
    std::vector<int> cyc;
    bool separated = body.find(',') != std::string::npos ||
                     body.find(' ') != std::string::npos;
    if (separated) {
      std::string cur;
      for (char c : body) {
        if (c == ',' || c == ' ') {
          if (!cur.empty()) cyc.push_back(std::stoi(cur));
          cur.clear();
        } else {
          cur += c;
        }
      }
      if (!cur.empty()) cyc.push_back(std::stoi(cur));
    } else {
      for (char c : body) {
        if (!std::isdigit(static_cast<unsigned char>(c)))
          throw std::invalid_argument("bad cycle entry: " + body);
        cyc.push_back(c - '0');
      }
    }
    if (cyc.size() >= 2) {
      // cycle (c1 c2 ... ck): c1 -> c2 -> ... -> ck -> c1
      auto q = SignedPerm::identity(n);
      for (size_t a = 0; a < cyc.size(); ++a) {
        int from = cyc[a] - 1, to = cyc[(a + 1) % cyc.size()] - 1;
        if (from < 0 || from >= n || to < 0 || to >= n)
          throw std::invalid_argument("cycle entry out of range");
        q.img[from] = to;
      }
      if (!q.is_permutation())
        throw std::invalid_argument("bad cycle: " + body);
      p = q * p;
    }
    pos = close + 1;
  }
  return p;
}

}  // namespace

WeylElt parse_element(GroupKind kind, const std::string& text) {
  // format: t:[...];s:[...]   or   t:[...];s:(..)(..)
  size_t tpos = text.find("t:");
  size_t spos = text.find(";s:");
  if (tpos == std::string::npos || spos == std::string::npos)
    throw std::invalid_argument("cannot parse element: " + text);
  std::string tpart = text.substr(tpos + 2, spos - tpos - 2);
  std::string spart = text.substr(spos + 3);
  if (tpart.size() < 2 || tpart.front() != '[' || tpart.back() != ']')
    throw std::invalid_argument("bad translation part: " + tpart);
  IntVec v = parse_int_list(tpart.substr(1, tpart.size() - 2));
  int n = kind.n();
  if (static_cast<int>(v.size()) != n)
    throw std::invalid_argument("translation part has wrong length");
  SignedPerm s;
  if (!spart.empty() && spart.front() == '[') {
    if (spart.back() != ']')
      throw std::invalid_argument("bad permutation part: " + spart);
    auto imgs = parse_int_list(spart.substr(1, spart.size() - 2));
    if (static_cast<int>(imgs.size()) != n)
      throw std::invalid_argument("permutation part has wrong length");
    for (int& x : imgs) x -= 1;
    s = SignedPerm(imgs);
  } else {
    s = parse_cycles(n, spart);
  }
  return WeylElt(kind, std::move(v), std::move(s));
}

bool SignedPerm::is_permutation() const {
  std::vector<char> hit(img.size(), 0);
  for (int x : img) {
    if (x < 0 || x >= n() || hit[x]) return false;
    hit[x] = 1;
  }
  return true;
}

bool SignedPerm::is_star() const {
  for (int j = 0; j < n(); ++j)
    if (img[dual(n(), j)] != dual(n(), img[j])) return false;
  return true;
}

bool SignedPerm::is_even() const {
  std::vector<char> seen(img.size(), 0);
  int transpositions = 0;
  for (int j = 0; j < n(); ++j) {
    if (seen[j]) continue;
    int len = 0;
    for (int k = j; !seen[k]; k = img[k]) {
      seen[k] = 1;
      ++len;
    }
    transpositions += len - 1;
  }
  return transpositions % 2 == 0;
}

}  // namespace affadm
