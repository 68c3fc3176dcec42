// Copyright 2026 The oometric Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <doctest.h>

#include "cbo_oracle.hpp"
#include "oometric/classfile.hpp"
#include "oometric/coupling.hpp"
#include "oometric/forge.hpp"

using namespace oometric;
using namespace oometric::coupling;
using namespace oometric::classfile;
using forge::class_type;

namespace {

forge::ForgeMethod body(std::string name, std::vector<forge::ForgeInstruction> code) {
  forge::ForgeMethod m;
  m.name = std::move(name);
  m.code = forge::ForgeCode{};
  m.code->instructions = std::move(code);
  return m;
}

CouplingResult cbo_of(const forge::ForgeClass& spec, CouplingPolicy policy = CouplingPolicy::Literal,
                      std::vector<std::string> prefixes = {}) {
  return compute_cbo(parse_class(forge::build(spec)), policy, prefixes);
}

}  // namespace

TEST_CASE("class names of types") {
  CHECK_FALSE(class_name_of_type(PrimitiveType{PrimitiveKind::Int}));
  CHECK_FALSE(class_name_of_type(ArrayType{ClassType{"org.x.B"}, 1}));
  CHECK_FALSE(class_name_of_type(VoidType{}));
  CHECK(class_name_of_type(ClassType{"org.x.B"}) == "org.x.B");
}

TEST_CASE("register_coupling filters") {
  CouplingSet set("A", CouplingPolicy::Literal);
  CHECK_FALSE(set.register_coupling("A"));
  CHECK_FALSE(set.register_coupling("java.lang.String"));
  CHECK_FALSE(set.register_coupling("javax.swing.JPanel"));
  CHECK(set.register_coupling("org.x.B"));
  CHECK_FALSE(set.register_coupling("org.x.B"));
  CHECK(set.size() == 1);
  CHECK(set.register_coupling("javafx.scene.Node"));
  CHECK(set.register_coupling("A$Inner"));
  CHECK(set.register_coupling("javaz.Q"));
  CHECK(set.size() == 4);
  CHECK(set.is_jdk_class("java.util.List"));
  CHECK_FALSE(set.is_jdk_class("javafx.Foo"));
}

TEST_CASE("register_type composes") {
  CouplingSet set("A", CouplingPolicy::Literal);
  CHECK_FALSE(set.register_type(PrimitiveType{PrimitiveKind::Long}));
  CHECK_FALSE(set.register_type(VoidType{}));
  CHECK_FALSE(set.register_type(ArrayType{ClassType{"org.x.C"}, 2}));
  CHECK(set.register_type(ClassType{"org.x.C"}));
  CHECK(set.names() == std::set<std::string, std::less<>>{"org.x.C"});
}

TEST_CASE("custom prefixes") {
  CouplingSet set("A", CouplingPolicy::Literal, {"org.apache."});
  CHECK_FALSE(set.register_coupling("org.apache.bcel.Const"));
  CHECK(set.register_coupling("java.lang.String"));
}

TEST_CASE("policy parsing") {
  CHECK(parse_policy("literal") == CouplingPolicy::Literal);
  CHECK(parse_policy("extended") == CouplingPolicy::Extended);
  CHECK_FALSE(parse_policy("Literal"));
  CHECK(to_string(CouplingPolicy::Extended) == "extended");
  CHECK(default_jdk_prefixes() == std::vector<std::string>{"java.", "javax."});
}

TEST_CASE("trivial class scores zero") {
  forge::ForgeClass spec;
  spec.name = "A";
  CHECK(cbo_of(spec).cbo == 0);
}

TEST_CASE("superclass is an inheritance channel") {
  forge::ForgeClass spec;
  spec.name = "p.A";
  spec.super_name = "p.Base";
  spec.fields = {{"b", class_type("p.C")}};
  const auto r = cbo_of(spec);
  CHECK(r.cbo == 2);
  CHECK(r.set.contains("p.Base"));
}

TEST_CASE("interface plus field scores two under both policies") {
  forge::ForgeClass spec;
  spec.name = "A";
  spec.interfaces = {"org.x.I"};
  spec.fields = {{"f", class_type("org.x.F")}};
  CHECK(cbo_of(spec).cbo == 2);
  CHECK(cbo_of(spec, CouplingPolicy::Extended).cbo == 2);
}

TEST_CASE("method signature channels") {
  forge::ForgeClass spec;
  spec.name = "p.A";
  forge::ForgeMethod m;
  m.name = "m";
  m.access_flags = access::kAbstract | access::kPublic;
  m.descriptor = parse_method_descriptor("(Lp/P1;I[Lp/Arr;)Lp/R;");
  m.declared_exceptions = {"p.E", "java.io.IOException"};
  spec.methods = {m};
  const auto r = cbo_of(spec);
  CHECK(r.set.names() == std::set<std::string, std::less<>>{"p.E", "p.P1", "p.R"});
}

TEST_CASE("literal and extended instruction registrations") {
  forge::ForgeClass spec;
  spec.name = "p.A";
  MethodDescriptor call{{class_type("p.Arg")}, class_type("p.Ret")};
  auto m = body("m", {
      forge::insn(op::aload_0),
      forge::field_insn(op::getfield, "p.Owner", "f", class_type("p.FieldType")),
      forge::invoke(op::invokevirtual, class_type("p.Callee"), "call", call),
      forge::type_insn(op::new_, class_type("p.Created")),
      forge::type_insn(op::anewarray, class_type("p.Elem")),
      forge::ldc({TypeDescriptor{class_type("p.Literal")}}),
      forge::insn(op::athrow),
      forge::insn(op::return_),
  });
  m.code->handlers = {{0, 6, 6, std::string("p.Caught")}};
  spec.methods = {m};

  const auto literal = cbo_of(spec);
  CHECK(literal.set.names() == std::set<std::string, std::less<>>{"p.FieldType", "p.Ret"});
  const auto extended = cbo_of(spec, CouplingPolicy::Extended);
  CHECK(extended.set.names() == std::set<std::string, std::less<>>{
                                    "p.Arg", "p.Callee", "p.Caught", "p.FieldType", "p.Owner", "p.Ret"});
}

TEST_CASE("invokedynamic has no owner") {
  forge::ForgeClass spec;
  spec.name = "p.A";
  spec.major_version = 52;
  spec.methods = {body("m", {forge::invokedynamic("run", {{class_type("p.Cap")}, class_type("p.Fn")}),
                             forge::insn(op::areturn)})};
  CHECK(cbo_of(spec).set.names() == std::set<std::string, std::less<>>{"p.Fn"});
  CHECK(cbo_of(spec, CouplingPolicy::Extended).set.names() ==
        std::set<std::string, std::less<>>{"p.Cap", "p.Fn"});
}

TEST_CASE("array owner of a method call is filtered") {
  forge::ForgeClass spec;
  spec.name = "p.A";
  spec.methods = {body("m", {forge::insn(op::aconst_null),
                             forge::invoke(op::invokevirtual, ArrayType{ClassType{"p.X"}, 1}, "clone",
                                           {{}, class_type("java.lang.Object")}),
                             forge::insn(op::areturn)})};
  CHECK(cbo_of(spec, CouplingPolicy::Extended).cbo == 0);
}

TEST_CASE("filter fidelity") {
  SUBCASE("primitive-only class") {
    forge::ForgeClass spec;
    spec.name = "p.Prim";
    spec.fields = {{"a", PrimitiveType{PrimitiveKind::Int}}, {"b", PrimitiveType{PrimitiveKind::Double}}};
    spec.methods = {body("m", {forge::insn(op::iconst_0), forge::local(op::istore, 1),
                               forge::local(op::iload, 1), forge::insn(op::ireturn)})};
    spec.methods[0].descriptor = parse_method_descriptor("(JZ)I");
    CHECK(cbo_of(spec).cbo == 0);
    CHECK(cbo_of(spec, CouplingPolicy::Extended).cbo == 0);
  }
  SUBCASE("arrays of external classes") {
    forge::ForgeClass spec;
    spec.name = "p.Arr";
    spec.fields = {{"a", ArrayType{ClassType{"org.x.B"}, 1}}};
    spec.methods = {body("m", {forge::insn(op::aconst_null),
                               forge::type_insn(op::checkcast, ArrayType{ClassType{"org.x.C"}, 2}),
                               forge::insn(op::areturn)})};
    spec.methods[0].descriptor = parse_method_descriptor("([Lorg/x/D;)[Lorg/x/E;");
    CHECK(cbo_of(spec).cbo == 0);
  }
  SUBCASE("self references") {
    forge::ForgeClass spec;
    spec.name = "p.Self";
    spec.fields = {{"next", class_type("p.Self")}};
    spec.methods = {body("m", {forge::insn(op::aload_0),
                               forge::field_insn(op::getfield, "p.Self", "next", class_type("p.Self")),
                               forge::type_insn(op::checkcast, class_type("p.Self")),
                               forge::insn(op::areturn)})};
    CHECK(cbo_of(spec).cbo == 0);
    CHECK(cbo_of(spec, CouplingPolicy::Extended).cbo == 0);
  }
  SUBCASE("JDK-only references") {
    forge::ForgeClass spec;
    spec.name = "p.Jdk";
    spec.super_name = "java.lang.RuntimeException";
    spec.interfaces = {"java.io.Serializable"};
    spec.fields = {{"s", class_type("java.lang.String")}};
    spec.methods = {body("m", {forge::insn(op::aload_0),
                               forge::invoke(op::invokevirtual, class_type("javax.naming.Name"), "get",
                                             {{class_type("java.util.List")}, class_type("java.lang.Object")}),
                               forge::insn(op::areturn)})};
    CHECK(cbo_of(spec).cbo == 0);
    CHECK(cbo_of(spec, CouplingPolicy::Extended).cbo == 0);
  }
}

TEST_CASE("result agrees with the oracle on directed fixtures") {
  forge::ForgeClass spec;
  spec.name = "q.Z";
  spec.super_name = "q.Base";
  spec.interfaces = {"q.I", "java.lang.Runnable"};
  spec.fields = {{"a", class_type("q.F")}, {"b", ArrayType{ClassType{"q.G"}, 1}}};
  spec.methods = {body("m", {forge::insn(op::aconst_null), forge::type_insn(op::instanceof, class_type("q.T")),
                             forge::insn(op::ireturn)})};
  const auto bytes = forge::build(spec);
  for (const bool extended : {false, true}) {
    const auto r = compute_cbo(parse_class(bytes),
                               extended ? CouplingPolicy::Extended : CouplingPolicy::Literal);
    const std::set<std::string> got(r.set.names().begin(), r.set.names().end());
    CHECK(got == testing::oracle_coupling(bytes, extended));
  }
}
