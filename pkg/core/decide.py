"""
Decision procedures for the three reducibility relations.

Each relation is decided by classifying both types and comparing the
classes; no witness is built here.
"""

import enum
import logging

from .classify import OMEGA, HierarchyClass, hierarchy_class

logger = logging.getLogger(__name__)


class Relation(enum.Enum):
    HEAD = 'h'
    BETA_ETA = 'be'
    MULTI_HEAD = 'hp'

    @classmethod
    def parse(cls, text):
        try:
            return cls(text)
        except ValueError:
            raise ValueError(f"unknown relation {text!r}; use h, be or hp") from None

    def __str__(self):
        return self.value


_OMEGA_PAIR = {OMEGA, HierarchyClass.omega_plus(1)}


def classes_h(alpha, beta):
    return alpha <= beta


def classes_be(alpha, beta):
    return alpha <= beta or (alpha in _OMEGA_PAIR and beta in _OMEGA_PAIR)


def classes_hp(alpha, beta):
    # Finite classes from 2 up merge; omega stays apart from them.
    if classes_be(alpha, beta):
        return True
    return alpha.is_finite and beta.is_finite and alpha.offset >= 2 and beta.offset >= 2


_BY_RELATION = {
    Relation.HEAD: classes_h,
    Relation.BETA_ETA: classes_be,
    Relation.MULTI_HEAD: classes_hp,
}


def decide_h(source, target):
    return classes_h(hierarchy_class(source), hierarchy_class(target))


def decide_be(source, target):
    return classes_be(hierarchy_class(source), hierarchy_class(target))


def decide_hp(source, target):
    return classes_hp(hierarchy_class(source), hierarchy_class(target))


def decide_classes(relation, alpha, beta):
    return _BY_RELATION[relation](alpha, beta)


def decide(relation, source, target):
    alpha, beta = hierarchy_class(source), hierarchy_class(target)
    verdict = decide_classes(relation, alpha, beta)
    logger.debug(f"{source} <={relation} {target}: {alpha} vs {beta} -> {verdict}")
    return verdict
