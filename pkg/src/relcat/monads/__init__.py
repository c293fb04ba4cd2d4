"""Symmetric monoidal monads, their law checks and Kleisli models."""
from .base import (MONAD_BUDGET, IdentityMonad, MonadModel, MonoidObject, check_monad, check_monad_class,
                   table_monoid)
from .build import build_monad, build_monoid
from .carrier import CarrierMonad
from .enriched import DownsetMonad, HoarePowerset, SubsetMonad, enriched_monads, powerset
from .kleisli import KleisliModel, kleisli
from .semiring import SemiringMonad, UpweightMonad, semiring_monad, upweight
from .writer import WriterMonad, writer_monad

__all__ = ["MONAD_BUDGET", "CarrierMonad", "DownsetMonad", "HoarePowerset", "IdentityMonad", "KleisliModel",
           "MonadModel", "MonoidObject", "SemiringMonad", "SubsetMonad", "UpweightMonad", "WriterMonad",
           "build_monad", "build_monoid", "check_monad", "check_monad_class", "enriched_monads", "kleisli",
           "powerset", "semiring_monad", "table_monoid", "upweight", "writer_monad"]
