"""Registered experiments; every BaseExperiment subclass in this folder is discovered by ExperimentFactory"""
