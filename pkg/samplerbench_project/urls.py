"""
URL configuration for samplerbench_project project.

Only the admin is routed; it browses recorded runs, policies and results.
"""
from django.contrib import admin
from django.urls import path

urlpatterns = [
    path("admin/", admin.site.urls),
]
