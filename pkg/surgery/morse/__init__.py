"""Morse forms of surgery: level sets, component counts, projection and revolution geometry."""

from .components import DSU, count_components, nearest_neighbor_spacing
from .export import clouds_to_csv, export_csv, export_json, export_obj, load_csv, load_json_sample, write_samples
from .forms import evaluate, evaluate_many, gradient, gradient_check, gradient_many, hessian, hessian_index
from .geometry import revolve, stereographic_inverse, stereographic_project
from .models import LevelSetSample, MorseForm, PointCloud
from .sampling import core_view, sample_level_set, surgery_sequence, t_range

__all__ = [
    'DSU',
    'LevelSetSample',
    'MorseForm',
    'PointCloud',
    'clouds_to_csv',
    'core_view',
    'count_components',
    'evaluate',
    'evaluate_many',
    'export_csv',
    'export_json',
    'export_obj',
    'gradient',
    'gradient_check',
    'gradient_many',
    'hessian',
    'hessian_index',
    'load_csv',
    'load_json_sample',
    'nearest_neighbor_spacing',
    'revolve',
    'sample_level_set',
    'stereographic_inverse',
    'stereographic_project',
    'surgery_sequence',
    't_range',
    'write_samples',
]
