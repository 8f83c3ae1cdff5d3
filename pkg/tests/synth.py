"""Seeded generator of random ClassDecl projects for property tests."""

import random

from classmetrics import build_model
from classmetrics.parser import (BodyFacts, ClassDecl, CompilationUnit,
                                 FieldDecl, MethodDecl)

_TYPE_POOL = ["int", "String", "Object", "boolean", "double"]
_PARAM_POOL = [[], ["int"], ["String"], ["int", "int"], ["String", "Object"]]
_IMPORT_POOL = ["java.util.*", "java.io.*", "java.awt.*", "java.net.Socket"]


def random_body(rng: random.Random) -> BodyFacts:
    value_returns = rng.randint(0, 3)
    bare_returns = rng.randint(0, 2)
    return BodyFacts(
        decision_point_count=rng.randint(0, 6),
        short_circuit_count=rng.randint(0, 3),
        value_return_count=value_returns,
        bare_return_count=bare_returns,
        external_call_count=rng.randint(0, 8),
        internal_call_count=rng.randint(0, 4),
        statement_count=value_returns + bare_returns + rng.randint(0, 5),
    )


def random_class(rng: random.Random, name: str,
                 kind: str = "class") -> ClassDecl:
    decl = ClassDecl(name=name, kind=kind,
                     visibility=rng.choice(["public", ""]))
    used_signatures = set()
    for j in range(rng.randint(0, 8)):
        params = rng.choice(_PARAM_POOL)
        if rng.random() < 0.15:
            method = MethodDecl(name=name, is_constructor=True,
                                parameter_type_names=list(params))
        else:
            method = MethodDecl(
                name=f"m{rng.randint(0, 9)}",
                return_type_name=rng.choice(_TYPE_POOL + ["void"]),
                parameter_type_names=list(params),
            )
        if method.signature in used_signatures:
            continue
        used_signatures.add(method.signature)
        if kind == "interface" or rng.random() < 0.1:
            method.is_abstract = True
        else:
            method.body = random_body(rng)
        decl.methods.append(method)
    for k in range(rng.randint(0, 5)):
        decl.fields.append(FieldDecl(
            name=f"f{k}",
            declared_type_name=rng.choice(_TYPE_POOL + ["R0", "R1", "Held"]),
            array_rank=rng.choice([0, 0, 0, 1]),
            is_static=rng.random() < 0.25,
        ))
    return decl


def random_project(rng: random.Random, n_classes: int):
    """Build a model of n random classes with a sprinkling of relations."""
    units = []
    interface_names = []
    for i in range(n_classes):
        kind = "interface" if rng.random() < 0.12 else "class"
        decl = random_class(rng, f"R{i}", kind)
        if kind == "interface":
            interface_names.append(decl.name)
        elif i and rng.random() < 0.4:
            decl.superclass_name = (f"R{rng.randrange(i)}"
                                    if rng.random() < 0.7 else "External")
        if kind == "class" and interface_names and rng.random() < 0.3:
            decl.implemented_interface_names = [rng.choice(interface_names)]
        unit = CompilationUnit(
            file_path=f"r{i:03d}.java",
            package_name="synth",
            imports=[imp for imp in _IMPORT_POOL if rng.random() < 0.3],
            type_decls=[decl],
        )
        decl.unit_path = unit.file_path
        units.append(unit)
    # supers may name interfaces by accident; that is fine for metrics,
    # but keep the extends graph acyclic by construction (R_i -> R_{<i}).
    return build_model(units)
