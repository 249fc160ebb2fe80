# Generated by Django 5.2.6 on 2026-10-18 09:12

import django.db.models.deletion
from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = [
    ]

    operations = [
        migrations.CreateModel(
            name='ExperimentRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('command', models.CharField(choices=[('generate', 'Generate'), ('train', 'Train'), ('eval', 'Evaluate')], max_length=20)),
                ('status', models.CharField(choices=[('Running', 'Running'), ('Completed', 'Completed'), ('Failed', 'Failed')], default='Running', max_length=20)),
                ('master_seed', models.PositiveBigIntegerField()),
                ('output_dir', models.CharField(max_length=500)),
                ('config', models.JSONField(default=dict)),
            ],
            options={
                'ordering': ['-created_at'],
            },
        ),
        migrations.CreateModel(
            name='EvaluationResult',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('method', models.CharField(choices=[('MAB', 'Gradient bandit'), ('RWS', 'Random walk sampling'), ('URS', 'Uniform random sampling')], max_length=3)),
                ('budget', models.FloatField()),
                ('nmse_linear', models.FloatField()),
                ('nmse_db', models.FloatField()),
                ('clamped', models.BooleanField(default=False)),
                ('graphs', models.IntegerField()),
                ('seed', models.PositiveBigIntegerField()),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='results', to='sampling.experimentrun')),
            ],
            options={
                'ordering': ['run', 'budget', 'method'],
            },
        ),
        migrations.CreateModel(
            name='TrainedPolicy',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('created_at', models.DateTimeField(auto_now_add=True)),
                ('updated_at', models.DateTimeField(auto_now=True)),
                ('graph_index', models.IntegerField(blank=True, null=True)),
                ('is_mean', models.BooleanField(default=False)),
                ('weights', models.JSONField()),
                ('probabilities', models.JSONField()),
                ('episodes', models.IntegerField(default=0)),
                ('final_reward', models.FloatField(blank=True, null=True)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='policies', to='sampling.experimentrun')),
            ],
            options={
                'verbose_name_plural': 'Trained policies',
                'ordering': ['run', 'is_mean', 'graph_index'],
            },
        ),
    ]
