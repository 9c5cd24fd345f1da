#include "afprov/stable.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>

namespace afprov {

namespace {

enum class Value : std::uint8_t { Unassigned, In, Out };

class StableSearch {
 public:
  explicit StableSearch(const ArgumentationFramework& af) : af_(af) {}

  std::vector<ExtensionSet> run(const Labeling& grounded) {
    std::vector<Value> values(af_.size(), Value::Unassigned);
    std::vector<ArgIndex> queue;
    for (ArgIndex i = 0; i < af_.size(); ++i) {
      if (grounded[i] == Label::In) values[i] = Value::In;
      if (grounded[i] == Label::Out) values[i] = Value::Out;
      queue.push_back(i);
    }
    if (propagate(values, queue)) search(std::move(values));
    return std::move(found_);
  }

 private:
  void assign(std::vector<Value>& values, std::vector<ArgIndex>& queue,
              ArgIndex x, Value v) {
    values[x] = v;
    queue.push_back(x);
    for (EdgeIndex e : af_.incoming(x)) queue.push_back(af_.edge(e).attacker);
    for (EdgeIndex e : af_.outgoing(x)) queue.push_back(af_.edge(e).target);
  }

  // Unit-style propagation; false on contradiction.
  bool propagate(std::vector<Value>& values, std::vector<ArgIndex>& queue) {
    while (!queue.empty()) {
      const ArgIndex x = queue.back();
      queue.pop_back();
      switch (values[x]) {
        case Value::In:
          // Conflict-freeness: attackers and targets of an IN argument are OUT.
          for (EdgeIndex e : af_.incoming(x)) {
            const ArgIndex y = af_.edge(e).attacker;
            if (values[y] == Value::In) return false;
            if (values[y] == Value::Unassigned) assign(values, queue, y, Value::Out);
          }
          for (EdgeIndex e : af_.outgoing(x)) {
            const ArgIndex t = af_.edge(e).target;
            if (values[t] == Value::In) return false;
            if (values[t] == Value::Unassigned) assign(values, queue, t, Value::Out);
          }
          break;
        case Value::Out: {
          // Stability: an OUT argument needs an IN attacker.
          std::optional<ArgIndex> open;
          std::size_t open_count = 0;
          bool supported = false;
          for (EdgeIndex e : af_.incoming(x)) {
            const ArgIndex y = af_.edge(e).attacker;
            if (values[y] == Value::In) {
              supported = true;
              break;
            }
            if (values[y] == Value::Unassigned && open != y) {
              open = y;
              ++open_count;
            }
          }
          if (supported) break;
          if (open_count == 0) return false;
          if (open_count == 1) assign(values, queue, *open, Value::In);
          break;
        }
        case Value::Unassigned: {
          const auto in = af_.incoming(x);
          const bool all_out = std::all_of(in.begin(), in.end(), [&](EdgeIndex e) {
            return values[af_.edge(e).attacker] == Value::Out;
          });
          if (all_out) assign(values, queue, x, Value::In);
          break;
        }
      }
    }
    return true;
  }

  void search(std::vector<Value> values) {
    auto it = std::find(values.begin(), values.end(), Value::Unassigned);
    if (it == values.end()) {
      std::vector<bool> in(values.size());
      for (std::size_t i = 0; i < values.size(); ++i) in[i] = values[i] == Value::In;
      auto candidate = from_membership(af_, in);
      if (is_stable(af_, candidate)) found_.push_back(std::move(candidate));
      return;
    }
    const auto x = static_cast<ArgIndex>(it - values.begin());
    for (Value branch : {Value::In, Value::Out}) {
      auto next = values;
      std::vector<ArgIndex> queue;
      assign(next, queue, x, branch);
      if (propagate(next, queue)) search(std::move(next));
    }
  }

  const ArgumentationFramework& af_;
  std::vector<ExtensionSet> found_;
};

}  // namespace

Labeling labeling_of(const ArgumentationFramework& af, const ExtensionSet& s) {
  const auto in = membership(af, s);
  std::vector<Label> labels(af.size());
  for (ArgIndex i = 0; i < af.size(); ++i) labels[i] = in[i] ? Label::In : Label::Out;
  return Labeling(std::move(labels));
}

std::vector<StableSolution> enumerate_stable(const GroundedSolution& grounded) {
  const auto& af = grounded.af();
  auto extensions = StableSearch(af).run(grounded.labeling());
  std::sort(extensions.begin(), extensions.end(), extension_less);
  extensions.erase(std::unique(extensions.begin(), extensions.end()),
                   extensions.end());
  std::vector<StableSolution> out;
  out.reserve(extensions.size());
  for (auto& ext : extensions) {
    auto labeling = labeling_of(af, ext);
    out.push_back({out.size() + 1, std::move(ext), std::move(labeling)});
  }
  return out;
}

std::vector<StableSolution> enumerate_stable(const ArgumentationFramework& af) {
  return enumerate_stable(solve_grounded(af));
}

}  // namespace afprov
