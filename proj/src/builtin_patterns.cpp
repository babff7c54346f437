#include "dpcheck/pattern_rules.hpp"

namespace dpcheck {

namespace {

// The shipped defaults. The pattern/ directory in the distribution carries
// the same text; these stay available when the tool is used as a library.

constexpr const char* kAdapterRules = R"(pattern Adapter
member A Adapter Normal
member B Target Abstracted
member C Adaptee Normal
connection A inherits B
connection A has C
)";

constexpr const char* kAdapterChars = R"(pattern Adapter
abstraction Adapter Normal required
abstraction Target Abstracted required
abstraction Adaptee Normal required
relationship Inheritance Adapter Target inherits required
relationship Aggregation Adapter Adaptee has required
relationship Association Adapter Adaptee calls required
relationship Composition Adapter Adaptee creates optional
relationship Association Adapter Adaptee references optional
)";

constexpr const char* kDecoratorRules = R"(pattern Decorator
member A ConcreteComponent Normal
member B Component Abstracted
member C ConcreteDecorator Normal
member D Decorator Abstracted
connection A inherits B
connection C inherits D
connection D inherits B
)";

constexpr const char* kDecoratorChars = R"(pattern Decorator
abstraction ConcreteComponent Normal required
abstraction Component Abstracted required
abstraction ConcreteDecorator Normal required
abstraction Decorator Abstracted required
relationship Inheritance ConcreteComponent Component inherits required
relationship Inheritance Decorator Component inherits required
relationship Aggregation Decorator Component has required
relationship Inheritance ConcreteDecorator Decorator inherits required
relationship Association ConcreteDecorator Component calls optional
relationship Association ConcreteDecorator Component references optional
relationship Composition Decorator Component creates optional
)";

constexpr const char* kFactoryMethodRules = R"(pattern FactoryMethod
member A ConcreteProduct Normal
member B Product Abstracted
member C ConcreteCreator Normal
member D Creator Abstracted
connection A inherits B
connection C inherits D
connection C creates A
)";

constexpr const char* kFactoryMethodChars = R"(pattern FactoryMethod
abstraction ConcreteProduct Normal required
abstraction Product Abstracted required
abstraction ConcreteCreator Normal required
abstraction Creator Abstracted required
relationship Inheritance ConcreteProduct Product inherits required
relationship Inheritance ConcreteCreator Creator inherits required
relationship Composition ConcreteCreator ConcreteProduct creates required
relationship Dependency ConcreteCreator Product uses required
relationship Dependency Creator Product uses optional
relationship Association Creator Product calls optional
relationship Association Creator Product references optional
)";

constexpr const char* kObserverRules = R"(pattern Observer
member A ConcreteObserver Normal
member B Observer Abstracted
member C ConcreteSubject Normal
member D Subject Abstracted
connection A inherits B
connection C inherits D
connection C has B
)";

constexpr const char* kObserverChars = R"(pattern Observer
abstraction ConcreteObserver Normal required
abstraction Observer Interface required
abstraction ConcreteSubject Normal required
abstraction Subject Interface required
relationship Inheritance ConcreteObserver Observer inherits required
relationship Inheritance ConcreteSubject Subject inherits required
relationship Aggregation ConcreteSubject Observer has required
relationship Association ConcreteSubject Observer calls required
relationship Association ConcreteSubject Observer references required
relationship Association ConcreteObserver Subject references optional
relationship Association ConcreteObserver Subject calls optional
)";

constexpr const char* kSimpleFactoryRules = R"(pattern SimpleFactory
member A ConcreteProduct Normal
member B Product Abstracted
member C Factory Normal
connection A inherits B
connection C creates A
)";

constexpr const char* kSimpleFactoryChars = R"(pattern SimpleFactory
abstraction ConcreteProduct Normal required
abstraction Product Abstracted required
abstraction Factory Normal required
relationship Inheritance ConcreteProduct Product inherits required
relationship Composition Factory ConcreteProduct creates required
relationship Dependency Factory Product uses required
relationship Association Factory Product references optional
relationship Association Factory Product calls optional
)";

constexpr const char* kStateRules = R"(pattern State
member A ConcreteState Normal
member B State Abstracted
member C ConcreteContext Normal
member D Context Normal
connection A inherits B
connection C inherits D
connection D has B
)";

constexpr const char* kStateChars = R"(pattern State
abstraction ConcreteState Normal required
abstraction State Interface required
abstraction ConcreteContext Normal optional
abstraction Context Normal required
relationship Inheritance ConcreteState State inherits required
relationship Inheritance ConcreteContext Context inherits required
relationship Composition ConcreteContext ConcreteState creates required
relationship Association Context State calls required
relationship Aggregation Context State has required
relationship Association Context State references optional
relationship Dependency Context State uses optional
)";

constexpr const char* kStrategyRules = R"(pattern Strategy
member A ConcreteStrategy Normal
member B Strategy Abstracted
member C ConcreteContext Normal
member D Context Normal
connection A inherits B
connection C inherits D
connection D has B
)";

constexpr const char* kStrategyChars = R"(pattern Strategy
abstraction ConcreteStrategy Normal required
abstraction Strategy Interface required
abstraction ConcreteContext Normal optional
abstraction Context Normal required
relationship Inheritance ConcreteStrategy Strategy inherits required
relationship Inheritance ConcreteContext Context inherits required
relationship Composition ConcreteContext ConcreteStrategy creates required
relationship Association Context Strategy calls required
relationship Aggregation Context Strategy has required
relationship Association Context Strategy references optional
relationship Dependency Context Strategy uses optional
)";

struct BuiltinText {
    const char* rules;
    const char* chars;
};

constexpr BuiltinText kBuiltins[] = {
    {kAdapterRules, kAdapterChars},
    {kDecoratorRules, kDecoratorChars},
    {kFactoryMethodRules, kFactoryMethodChars},
    {kObserverRules, kObserverChars},
    {kSimpleFactoryRules, kSimpleFactoryChars},
    {kStateRules, kStateChars},
    {kStrategyRules, kStrategyChars},
};

}  // namespace

std::vector<PatternDefinition> builtin_catalogs() {
    std::vector<PatternDefinition> defs;
    for (const auto& text : kBuiltins) {
        PatternDefinition def;
        def.rule = parse_rule_text(text.rules, "<builtin>");
        def.catalog = parse_catalog_text(text.chars, "<builtin>");
        validate_catalog(def.catalog, def.rule, "<builtin>");
        defs.push_back(std::move(def));
    }
    return defs;
}

}  // namespace dpcheck
